#pragma once

// Slope bookkeeping for the upper-bound argument on the surgered family:
// inside/outside transport through attaching maps, the common-twist
// parameterization in k, edge rounding in common-denominator form, and the
// orientation-corrected transport of the rounded slope to the third torus.

#include "sfs/bigint.hpp"
#include "sfs/mat2.hpp"
#include "sfs/slope.hpp"

namespace sfs {

// Attaching matrices of the surgered manifold in the fiber order used by the
// upper-bound argument: legs (-1/3, -m/(6m+1), (3m+n-2)/(6m+2n-5)).
Mat2 attach_a1();
Mat2 attach_a2(const Int& m);
Mat2 attach_a3(const Int& m, const Int& n);

// Attaching matrices of the base manifold M(0; 1/2, -1/3, -m/(6m+1)) in the
// bases the twisting-number bookkeeping is written in. Only the 1/2 and -1/3
// leg maps differ from the surgered presentation above.
Mat2 base_a1();
Mat2 base_a2();

// Boundary slopes with twisting n1, n2 on the first two tori share the
// common outside denominator t exactly when:
//   n1 = -(6m+1)k - (2m-2),  n2 = -3k - 1,  t = -3(6m+1)k - (6m-5)
// for some integer k >= 0, and then 3 n1 - 1 = (6m+1) n2 + 6 = t.
struct CommonTwist {
  Int m, k;
  Int n1, n2, t;
};

// m >= 1, k >= 0; the defining identities are asserted.
CommonTwist solve_common_twist(const Int& m, const Int& k);

// Slope measured on -d(M \ V_i) from the slope on d(V_i), and back.
Slope outside_slope(const Mat2& attach, const Slope& inside);
Slope inside_slope(const Mat2& attach, const Slope& outside);

// Edge rounding in common-denominator form: two boundary slopes p1/t and
// p2/t merge to (p1 + p2 - 1)/t on the rounded boundary. t must be the same
// *signed* denominator for both inputs; t = 0 is a domain error.
Slope edge_round(const Int& p1, const Int& p2, const Int& t);

// Writes s as p/t for the given signed denominator t; throws
// std::logic_error when impossible. Used to feed edge_round from transported
// slopes.
Int numerator_over(const Slope& s, const Int& t);

// Slope on d(V3) of the rounded boundary: the rounded boundary is oriented
// oppositely to the -d(M \ V3) frame in which the attaching map is defined,
// so the slope is negated before applying the inverse map. At k = 1 this
// sends 1/2 through -1/2 to infinity.
Slope rounded_to_v3(const Int& m, const Int& n, const Slope& s_round);

}  // namespace sfs
