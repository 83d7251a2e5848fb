#pragma once

// Negative continued fractions r = a0 - 1/(a1 - 1/(... - 1/ak)) and the
// solid-torus tight-structure count they feed. Valid digit lists have every
// digit <= -2, except that the slope -1 expands to the singleton [-1].

#include <vector>

#include "sfs/bigint.hpp"
#include "sfs/slope.hpp"

namespace sfs {

struct NegCF {
  std::vector<Int> digits;

  bool operator==(const NegCF&) const = default;
};

bool is_valid(const NegCF& cf);

// Floor-recursion expansion of a finite slope s <= -1. Integers expand to
// [s]; otherwise a0 = floor(s) and the recursion continues on -1/(s - a0),
// which keeps every digit <= -2. Throws std::domain_error for s > -1 or
// s = infinity.
NegCF neg_cf(const Slope& s);

// Exact evaluation; throws std::invalid_argument on an invalid digit list.
Slope cf_eval(const NegCF& cf);

// Number of tight contact structures on a solid torus with boundary slope s,
// s finite and <= -1: with digits [r0,...,rk] of s this is
// |(r0+1)(r1+1)...(r_{k-1}+1) * rk|; in particular -p counts p.
Int honda_count(const Slope& s);

}  // namespace sfs
