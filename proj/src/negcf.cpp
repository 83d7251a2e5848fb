#include "sfs/negcf.hpp"

namespace sfs {

bool is_valid(const NegCF& cf) {
  if (cf.digits.empty()) return false;
  if (cf.digits.size() == 1 && cf.digits[0] == -1) return true;
  for (const Int& d : cf.digits)
    if (d > -2) return false;
  return true;
}

NegCF neg_cf(const Slope& s) {
  if (!at_most_minus_one(s))
    throw std::domain_error("neg_cf: slope " + to_string(s) + " is not <= -1");
  NegCF cf;
  Int p = s.num, q = s.den;
  while (true) {
    if (q == 1) {
      cf.digits.push_back(p);
      break;
    }
    Int a = floor_div(p, q);
    cf.digits.push_back(a);
    Int r = p - a * q;  // 0 < r < q since p/q is not an integer
    p = -q;
    q = r;
  }
  return cf;
}

Slope cf_eval(const NegCF& cf) {
  if (!is_valid(cf))
    throw std::invalid_argument("cf_eval: digits must all be <= -2, or be exactly [-1]");
  // Fold from the right: v <- d - 1/v. Tails stay < -1, so 1/v never blows up.
  Int p = cf.digits.back(), q = 1;
  for (auto it = std::next(cf.digits.rbegin()); it != cf.digits.rend(); ++it) {
    Int next_p = *it * p - q;
    q = p;
    p = next_p;
  }
  return canonical(p, q);
}

Int honda_count(const Slope& s) {
  NegCF cf = neg_cf(s);  // validates s <= -1
  Int count = cf.digits.back();
  for (std::size_t i = 0; i + 1 < cf.digits.size(); ++i) count *= cf.digits[i] + 1;
  return abs(count);
}

}  // namespace sfs
