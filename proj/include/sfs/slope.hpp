#pragma once

// Slopes: extended rationals p/q recording isotopy classes of essential
// curves on a torus. A slope is kept in canonical form at all times:
//   gcd(|num|, |den|) = 1,  den >= 0,  infinity = 1/0,  (0,0) forbidden.
// Two raw pairs are the same slope iff they agree projectively, so equality
// on canonical representatives is plain field equality.

#include <string>

#include "sfs/bigint.hpp"

namespace sfs {

struct Slope {
  Int num{0};
  Int den{1};

  bool operator==(const Slope&) const = default;
};

// The only constructor: reduces, fixes signs, maps all (p,0) to 1/0.
// Throws std::domain_error on (0,0).
Slope canonical(const Int& raw_num, const Int& raw_den);

bool is_infinite(const Slope& s);
bool is_integer(const Slope& s);

// -s; infinity is fixed.
Slope reverse_orientation(const Slope& s);

// Exact arithmetic on finite slopes (throws std::domain_error on infinity).
Slope add(const Slope& a, const Slope& b);
Slope sub(const Slope& a, const Slope& b);

// -1/s for finite nonzero s.
Slope neg_reciprocal(const Slope& s);

// floor(p/q) of a finite slope.
Int slope_floor(const Slope& s);

// True iff s is finite and s <= -1.
bool at_most_minus_one(const Slope& s);

// Total order used for sorting multisets of slopes; finite slopes compare by
// value, infinity sorts last.
bool slope_less(const Slope& a, const Slope& b);

// "p/q" with "inf" for infinity. With integers_bare, whole numbers print
// without the "/1" (used by the text renderer).
std::string to_string(const Slope& s, bool integers_bare = false);

// Accepts "p", "p/q" and "inf"; the sign may appear on the numerator only.
Slope parse_slope(const std::string& text);

}  // namespace sfs
