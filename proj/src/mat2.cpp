#include "sfs/mat2.hpp"

#include <vector>

namespace sfs {

Mat2 mat2(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (a * d - b * c != 1)
    throw std::invalid_argument("matrix [[" + a.get_str() + "," + b.get_str() + "],[" +
                                c.get_str() + "," + d.get_str() + "]] must have determinant +1");
  return Mat2{a, b, c, d};
}

Mat2 identity() { return Mat2{1, 0, 0, 1}; }

Int det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 invert(const Mat2& m) { return Mat2{m.d, -m.b, -m.c, m.a}; }

Slope act(const Mat2& m, const Slope& s) {
  // (q,p) = (den,num); a det-1 matrix never sends a nonzero vector to zero.
  Int q = m.a * s.den + m.b * s.num;
  Int p = m.c * s.den + m.d * s.num;
  return canonical(p, q);
}

std::string to_string(const Mat2& m) {
  return m.a.get_str() + "," + m.b.get_str() + "," + m.c.get_str() + "," + m.d.get_str();
}

Mat2 parse_mat2(const std::string& text) {
  std::vector<Int> entries;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    entries.push_back(parse_int(text.substr(start, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (entries.size() != 4)
    throw std::invalid_argument("matrix '" + text + "': expected a,b,c,d");
  return mat2(entries[0], entries[1], entries[2], entries[3]);
}

}  // namespace sfs
