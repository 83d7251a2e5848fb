#include "sfs/seifert.hpp"

#include <algorithm>

namespace sfs {

SeifertInvariants seifert(Int e0, std::vector<Slope> ratios) {
  for (const Slope& r : ratios)
    if (is_infinite(r))
      throw std::invalid_argument("seifert: ratios must be finite");
  return SeifertInvariants{std::move(e0), std::move(ratios)};
}

SeifertInvariants normalize(const SeifertInvariants& inv) {
  SeifertInvariants out;
  out.e0 = inv.e0;
  for (const Slope& r : inv.ratios) {
    Int f = slope_floor(r);
    out.e0 += f;
    Slope frac = canonical(r.num - f * r.den, r.den);  // in [0,1)
    if (frac.num != 0) out.ratios.push_back(frac);
  }
  return out;
}

bool is_equivalent(const SeifertInvariants& x, const SeifertInvariants& y) {
  SeifertInvariants nx = normalize(x), ny = normalize(y);
  if (nx.e0 != ny.e0 || nx.ratios.size() != ny.ratios.size()) return false;
  std::sort(nx.ratios.begin(), nx.ratios.end(), slope_less);
  std::sort(ny.ratios.begin(), ny.ratios.end(), slope_less);
  return nx.ratios == ny.ratios;
}

Slope euler_number(const SeifertInvariants& inv) {
  Slope e = canonical(inv.e0, 1);
  for (const Slope& r : inv.ratios) e = add(e, r);
  return e;
}

Slope leg_coefficient(const Slope& r) { return neg_reciprocal(r); }
Slope coefficient_to_ratio(const Slope& c) { return neg_reciprocal(c); }

SeifertInvariants meridian_surgery(const SeifertInvariants& inv,
                                   std::size_t leg, const std::optional<Int>& framing) {
  if (leg >= inv.ratios.size())
    throw std::invalid_argument("meridian_surgery: no leg " + std::to_string(leg));
  if (!framing) return inv;  // no-surgery sentinel
  if (*framing == 0)
    throw std::domain_error("meridian_surgery: framing 0 changes the fibration type");
  Slope coeff = leg_coefficient(inv.ratios[leg]);
  Slope slammed = sub(coeff, canonical(1, *framing));
  if (slammed.num == 0)
    throw std::domain_error("meridian_surgery: surgery eliminates the fiber");
  SeifertInvariants out = inv;
  out.ratios[leg] = coefficient_to_ratio(slammed);
  return normalize(out);
}

FiberedDecomposition seifert_to_decomposition(const SeifertInvariants& inv) {
  if (inv.ratios.size() != 3)
    throw std::invalid_argument("seifert_to_decomposition: need exactly three legs, got " +
                                std::to_string(inv.ratios.size()));
  std::array<Slope, 3> legs = {inv.ratios[0], inv.ratios[1], inv.ratios[2]};
  if (inv.e0 != 0) legs[0] = add(legs[0], canonical(inv.e0, 1));
  FiberedDecomposition dec;
  for (int i = 0; i < 3; ++i) {
    const Int& alpha = legs[i].den;  // >= 1
    const Int& beta = legs[i].num;
    // Meridian -> (alpha, -beta); complete with alpha*y + beta*x = 1,
    // 0 <= x < alpha.
    Int x = 0;
    if (alpha != 1) {
      Int beta_mod = ((beta % alpha) + alpha) % alpha;
      if (mpz_invert(x.get_mpz_t(), beta_mod.get_mpz_t(), alpha.get_mpz_t()) == 0)
        throw std::logic_error("seifert_to_decomposition: leg not in lowest terms");
    }
    Int y = exact_div(1 - beta * x, alpha);
    dec.attaching[i] = mat2(alpha, x, -beta, y);
  }
  return dec;
}

std::string to_string(const SeifertInvariants& inv) {
  std::string out = "M(" + inv.e0.get_str() + ";";
  for (std::size_t i = 0; i < inv.ratios.size(); ++i)
    out += (i == 0 ? " " : ", ") + to_string(inv.ratios[i], /*integers_bare=*/true);
  out += ")";
  return out;
}

static std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

SeifertInvariants parse_seifert(const std::string& text) {
  std::string t = strip(text);
  if (t.size() < 4 || (t[0] != 'M' && t[0] != 'm') || t[1] != '(' || t.back() != ')')
    throw std::invalid_argument("seifert '" + text + "': expected M(e0; r1, r2, ...)");
  std::string body = t.substr(2, t.size() - 3);
  auto semi = body.find(';');
  std::string e0_text = strip(semi == std::string::npos ? body : body.substr(0, semi));
  SeifertInvariants inv;
  inv.e0 = parse_int(e0_text);
  if (semi != std::string::npos && !strip(body.substr(semi + 1)).empty()) {
    std::string rest = body.substr(semi + 1);
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      std::string piece =
          strip(comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start));
      inv.ratios.push_back(parse_slope(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return seifert(inv.e0, inv.ratios);
}

}  // namespace sfs
