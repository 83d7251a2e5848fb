#pragma once

// Seifert invariants M(e0; r1,...,rk) of small Seifert fibered spaces:
// normalization, equivalence, Euler number, the leg <-> surgery-coefficient
// correspondence, meridian slam-dunk surgery, and the pants x S^1 plus solid
// tori decomposition with its attaching matrices.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfs/bigint.hpp"
#include "sfs/mat2.hpp"
#include "sfs/slope.hpp"

namespace sfs {

struct SeifertInvariants {
  Int e0{0};
  std::vector<Slope> ratios;  // finite rationals; order is presentation order

  bool operator==(const SeifertInvariants&) const = default;
};

// Validating constructor: every ratio must be finite.
SeifertInvariants seifert(Int e0, std::vector<Slope> ratios);

// Canonical form: each ratio replaced by its fractional part in [0,1), the
// floors absorbed into e0, ratios that become 0 dropped. Preserves the Euler
// number and is idempotent.
SeifertInvariants normalize(const SeifertInvariants& inv);

// True iff the normalized forms agree up to reordering of the ratios.
bool is_equivalent(const SeifertInvariants& x, const SeifertInvariants& y);

// e0 + sum of ratios, exactly.
Slope euler_number(const SeifertInvariants& inv);

// The leg with ratio r is a fiber whose surgery diagram circle carries
// coefficient c = -1/r; the two maps below are the same involution.
Slope leg_coefficient(const Slope& r);
Slope coefficient_to_ratio(const Slope& c);

// Slam-dunks an f-framed meridian of the given leg (0-based index): the
// leg's coefficient c = -1/r becomes c - 1/f. No framing (std::nullopt) is
// the do-nothing sentinel and returns the input unchanged; f = 0 is rejected
// (it changes the topology type). The result is normalized.
SeifertInvariants meridian_surgery(const SeifertInvariants& inv,
                                   std::size_t leg, const std::optional<Int>& framing);

struct FiberedDecomposition {
  // Attaching maps d(V_i) -> -d(pants x S^1), determinant +1 each.
  std::array<Mat2, 3> attaching;
};

// Decomposition of a three-leg presentation as pants x S^1 glued to three
// solid tori. For a leg r = beta/alpha (alpha > 0) the meridian maps to the
// first column (alpha, -beta)^T; the second column (x, y) is the unique
// det-1 completion with 0 <= x < alpha. This reproduces the classical
// matrices [[2,1],[-1,0]] for the 1/2 leg and [[6m+1,6],[m,1]] for the
// -m/(6m+1) leg. A nonzero e0 is folded into the first leg beforehand.
// Throws std::invalid_argument unless there are exactly three legs.
FiberedDecomposition seifert_to_decomposition(const SeifertInvariants& inv);

// "M(e0; p1/q1, p2/q2, ...)" (integers rendered bare; no legs -> "M(e0;)").
std::string to_string(const SeifertInvariants& inv);
SeifertInvariants parse_seifert(const std::string& text);

}  // namespace sfs
