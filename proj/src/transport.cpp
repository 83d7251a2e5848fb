#include "sfs/transport.hpp"

namespace sfs {

Mat2 attach_a1() { return mat2(3, -1, 1, 0); }

Mat2 attach_a2(const Int& m) { return mat2(6 * m + 1, 6, m, 1); }

Mat2 attach_a3(const Int& m, const Int& n) {
  return mat2(6 * m + 2 * n - 5, 2, -3 * m - n + 2, -1);
}

Mat2 base_a1() { return mat2(2, 1, -1, 0); }
Mat2 base_a2() { return mat2(3, -1, 1, 0); }

CommonTwist solve_common_twist(const Int& m, const Int& k) {
  if (m < 1) throw std::invalid_argument("solve_common_twist: m must be >= 1");
  if (k < 0) throw std::invalid_argument("solve_common_twist: k must be >= 0");
  CommonTwist ct;
  ct.m = m;
  ct.k = k;
  ct.n1 = -(6 * m + 1) * k - (2 * m - 2);
  ct.n2 = -3 * k - 1;
  ct.t = -3 * (6 * m + 1) * k - (6 * m - 5);
  if (3 * ct.n1 - 1 != ct.t || (6 * m + 1) * ct.n2 + 6 != ct.t)
    throw std::logic_error("solve_common_twist: twist identities violated");
  return ct;
}

Slope outside_slope(const Mat2& attach, const Slope& inside) { return act(attach, inside); }

Slope inside_slope(const Mat2& attach, const Slope& outside) {
  return act(invert(attach), outside);
}

Slope edge_round(const Int& p1, const Int& p2, const Int& t) {
  if (t == 0) throw std::domain_error("edge_round: zero common denominator");
  return canonical(p1 + p2 - 1, t);
}

Int numerator_over(const Slope& s, const Int& t) {
  if (is_infinite(s) || t == 0 || !mpz_divisible_p(t.get_mpz_t(), s.den.get_mpz_t()))
    throw std::logic_error("numerator_over: " + to_string(s) + " has no denominator " +
                           t.get_str());
  return s.num * exact_div(t, s.den);
}

Slope rounded_to_v3(const Int& m, const Int& n, const Slope& s_round) {
  return inside_slope(attach_a3(m, n), reverse_orientation(s_round));
}

}  // namespace sfs
