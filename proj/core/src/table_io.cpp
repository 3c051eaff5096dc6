#include "holoroot/table_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace holoroot {

using nlohmann::ordered_json;

std::string to_json(const CoeffTable& t) {
  ordered_json doc;
  doc["k"] = t.k();
  doc["Q"] = t.order();
  ordered_json entries = ordered_json::array();
  for (const auto& [key, value] : t.values()) {
    ordered_json e;
    e["q"] = key.q;
    e["r"] = key.r;
    e["num"] = value.get_num().get_str();
    e["den"] = value.get_den().get_str();
    entries.push_back(std::move(e));
  }
  doc["coefficients"] = std::move(entries);
  return doc.dump() + "\n";
}

std::string to_csv(const CoeffTable& t) {
  std::ostringstream os;
  os << "q,r,num,den\n";
  for (const auto& [key, value] : t.values())
    os << key.q << ',' << key.r << ',' << value.get_num().get_str() << ','
       << value.get_den().get_str() << '\n';
  return os.str();
}

std::string to_text(const CoeffTable& t) {
  std::ostringstream os;
  for (const auto& [key, value] : t.values())
    os << "C[" << key.q << ',' << key.r << "] = " << value.get_str() << '\n';
  return os.str();
}

CoeffTable table_from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    CoeffTable t(doc.at("k").get<std::size_t>(), doc.at("Q").get<std::uint32_t>());
    for (const auto& e : doc.at("coefficients")) {
      const QRKey key{e.at("q").get<std::uint32_t>(), e.at("r").get<std::uint32_t>()};
      const Rational value = parse_rational(e.at("num").get<std::string>() + "/" +
                                            e.at("den").get<std::string>());
      t.set(key, value);
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad coefficient table JSON: ") + ex.what());
  } catch (const std::out_of_range& ex) {
    throw std::invalid_argument(std::string("bad coefficient table JSON: ") + ex.what());
  }
}

}  // namespace holoroot
