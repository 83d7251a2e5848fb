#pragma once

// 2x2 integer matrices of determinant +1, acting projectively on slopes.
//
// Vector convention, fixed artifact-wide: the slope p/q is the column vector
// (q, p)^T — denominator on top. This is the unique convention under which
// the attaching matrices in mat2/transport reproduce all three boundary-slope
// formulas s1, s2, s3 of the surgered family at once; it is baked into act()
// and must not be changed independently of the transport module.

#include <string>

#include "sfs/bigint.hpp"
#include "sfs/slope.hpp"

namespace sfs {

struct Mat2 {
  // Row-major [[a,b],[c,d]].
  Int a{1}, b{0}, c{0}, d{1};

  bool operator==(const Mat2&) const = default;
};

// Validating constructor; throws std::invalid_argument unless ad - bc = +1.
Mat2 mat2(const Int& a, const Int& b, const Int& c, const Int& d);

Mat2 identity();
Int det(const Mat2& m);
Mat2 mul(const Mat2& x, const Mat2& y);

// Inverse of a determinant-1 matrix: [[d,-b],[-c,a]].
Mat2 invert(const Mat2& m);

// M . (q,p)^T = (q',p')^T, returned as the canonical slope p'/q'.
// Infinity travels through as the vector (0,1)^T.
Slope act(const Mat2& m, const Slope& s);

// "a,b,c,d" row-major.
std::string to_string(const Mat2& m);
Mat2 parse_mat2(const std::string& text);

}  // namespace sfs
