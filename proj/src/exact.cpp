#include "cloci/exact.hpp"

namespace cloci {

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& part) -> Int {
    if (part.empty()) throw ParseError("empty rational part in '" + text + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw ParseError("bad rational '" + text + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw ParseError("bad rational '" + text + "'");
    return Int(part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  if (den < 0) {  // the backend requires a positive denominator
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

}  // namespace cloci
