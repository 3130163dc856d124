#pragma once

#include <string>

#include "ot/point.hpp"

namespace ot {

// Text format for point sequences:
//   # comment lines start with '#'
//   dim <d>
//   <c_1> <c_2> ... <c_d>     one point per line, "p/q" or integer
// Serialization round-trips losslessly.
PointSequence parse_point_file(const std::string& text);
std::string serialize_point_file(const PointSequence& seq);

PointSequence load_point_file(const std::string& path);
void save_point_file(const PointSequence& seq, const std::string& path);

}  // namespace ot
