#include "ot/rational.hpp"

#include <cctype>

#include "ot/point.hpp"

namespace ot {

Rational parse_rational(const std::string& text) {
  require(!text.empty(), ErrorCode::ParseError, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(text, 10);
      return Rational(n);
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    require(!num.empty() && !den.empty(), ErrorCode::ParseError,
            "malformed rational '" + text + "'");
    Integer n(num, 10), d(den, 10);
    require(sgn(d) != 0, ErrorCode::ParseError,
            "zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string DegeneracyWitness::describe() const {
  switch (kind) {
    case Kind::None:
      return "none";
    case Kind::Hyperplane: {
      std::string s = "points {";
      for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
      }
      return s + "} lie on a common hyperplane";
    }
    case Kind::SharedCoordinate:
      return "points " + std::to_string(indices[0]) + " and " +
             std::to_string(indices[1]) + " share coordinate " +
             std::to_string(axis);
  }
  return "none";
}

}  // namespace ot
