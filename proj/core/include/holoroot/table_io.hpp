#pragma once

// Serialization of coefficient tables. JSON layout:
//   {"k":2,"Q":4,"coefficients":[{"q":0,"r":0,"num":"-1","den":"1"},...]}
// with entries sorted by (q, r). CSV uses the columns q,r,num,den.

#include <string>
#include <string_view>

#include "holoroot/taylor.hpp"

namespace holoroot {

std::string to_json(const CoeffTable& t);
std::string to_csv(const CoeffTable& t);
/// One `C[q,r] = value` line per entry.
std::string to_text(const CoeffTable& t);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
CoeffTable table_from_json(std::string_view text);

}  // namespace holoroot
