#include "sfs/slope.hpp"

namespace sfs {

Slope canonical(const Int& raw_num, const Int& raw_den) {
  if (raw_num == 0 && raw_den == 0)
    throw std::domain_error("slope (0,0) is not a curve");
  if (raw_den == 0) return Slope{1, 0};
  Int g = gcd(raw_num, raw_den);  // > 0 here
  Int num = raw_num / g;
  Int den = raw_den / g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Slope{num, den};
}

bool is_infinite(const Slope& s) { return s.den == 0; }
bool is_integer(const Slope& s) { return s.den == 1; }

Slope reverse_orientation(const Slope& s) {
  if (is_infinite(s)) return s;
  return Slope{-s.num, s.den};
}

static void require_finite(const Slope& s, const char* what) {
  if (is_infinite(s)) throw std::domain_error(std::string(what) + ": slope is infinite");
}

Slope add(const Slope& a, const Slope& b) {
  require_finite(a, "add");
  require_finite(b, "add");
  return canonical(a.num * b.den + b.num * a.den, a.den * b.den);
}

Slope sub(const Slope& a, const Slope& b) {
  require_finite(a, "sub");
  require_finite(b, "sub");
  return canonical(a.num * b.den - b.num * a.den, a.den * b.den);
}

Slope neg_reciprocal(const Slope& s) {
  require_finite(s, "neg_reciprocal");
  if (s.num == 0) throw std::domain_error("neg_reciprocal: slope is zero");
  return canonical(-s.den, s.num);
}

Int slope_floor(const Slope& s) {
  require_finite(s, "slope_floor");
  return floor_div(s.num, s.den);
}

bool at_most_minus_one(const Slope& s) {
  return !is_infinite(s) && s.num <= -s.den;
}

bool slope_less(const Slope& a, const Slope& b) {
  if (is_infinite(a)) return false;
  if (is_infinite(b)) return true;
  return a.num * b.den < b.num * a.den;
}

std::string to_string(const Slope& s, bool integers_bare) {
  if (is_infinite(s)) return "inf";
  if (integers_bare && s.den == 1) return s.num.get_str();
  return s.num.get_str() + "/" + s.den.get_str();
}

Slope parse_slope(const std::string& text) {
  if (text == "inf") return Slope{1, 0};
  auto slash = text.find('/');
  if (slash == std::string::npos) return canonical(parse_int(text), 1);
  Int num = parse_int(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-')
    throw std::invalid_argument("slope '" + text + "': sign goes on the numerator");
  Int den = parse_int(den_text);
  if (num == 0 && den == 0)
    throw std::invalid_argument("slope '" + text + "': 0/0 is not a slope");
  return canonical(num, den);
}

}  // namespace sfs
