#include "sfs/family.hpp"

#include "sfs/negcf.hpp"
#include "sfs/transport.hpp"

namespace sfs {

std::string to_string(Fiber f) { return f == Fiber::F1 ? "F1" : "F2"; }

Fiber parse_fiber(const std::string& text) {
  if (text == "F1" || text == "f1") return Fiber::F1;
  if (text == "F2" || text == "f2") return Fiber::F2;
  throw std::invalid_argument("fiber must be F1 or F2, got '" + text + "'");
}

FamilyParams family_params(const Int& m, const Int& n, Fiber fiber) {
  if (m < 1) throw std::invalid_argument("family: m must be >= 1");
  if (n < 1) throw std::invalid_argument("family: n must be >= 1");
  return FamilyParams{m, n, fiber};
}

bool params_in_range(const FamilyParams& p) {
  if (p.m < 1 || p.n < 1) return false;
  return p.fiber == Fiber::F1 ? p.n < 18 * p.m + 4 : p.n < 12 * p.m + 3;
}

SeifertInvariants base_manifold(const Int& m) {
  if (m < 1) throw std::invalid_argument("base_manifold: m must be >= 1");
  return seifert(0, {canonical(1, 2), canonical(-1, 3), canonical(-m, 6 * m + 1)});
}

Int smooth_framing(const FamilyParams& p) {
  if (p.fiber == Fiber::F1) return -3 * p.m + 2 - p.n;
  return -2 * p.m - p.n + 2;
}

std::vector<TriangleRow> triangle(const FamilyParams& p) {
  const Int framing = smooth_framing(p);
  const Mat2 attach = p.fiber == Fiber::F1 ? base_a1() : base_a2();
  std::vector<TriangleRow> rows;
  for (Int a = 1; a <= p.m; ++a) {
    TriangleRow row;
    row.a = a;
    row.structures = a;
    row.reg_twist = -6 * (p.m - a) - 1;
    // The fiber and the regular fiber twist together through the top row of
    // the attaching map: attach.a * fiber_twist + attach.b = reg_twist.
    row.fiber_twist = exact_div(row.reg_twist - attach.b, attach.a);
    if (outside_slope(attach, canonical(1, row.fiber_twist)).den != -row.reg_twist)
      throw std::logic_error("triangle: twisting relation broken");
    row.contact_coeff = framing - row.fiber_twist;
    row.choices = -row.contact_coeff;
    if (row.contact_coeff > -1 || row.contact_coeff + row.fiber_twist != framing)
      throw std::logic_error("triangle: surgery coefficient out of contract");
    rows.push_back(row);
  }
  return rows;
}

Int lower_bound(const FamilyParams& p) {
  Int total = 0;
  for (const TriangleRow& row : triangle(p)) total += row.structures * row.choices;
  return total;
}

// Decomposition backing the F2 upper bound: the base manifold with the -1/3
// leg slam-dunked, fibers reordered so the surgered leg sits last.
static FiberedDecomposition f2_decomposition(const Int& m, const Int& n) {
  Slope coeff = leg_coefficient(canonical(-1, 3));
  Slope slammed = sub(coeff, canonical(1, -2 * m - n + 2));
  Slope surgered_leg = coefficient_to_ratio(slammed);  // -(2m+n-2)/(6m+3n-5)
  return seifert_to_decomposition(
      seifert(0, {canonical(1, 2), canonical(-m, 6 * m + 1), surgered_leg}));
}

std::vector<UpperRow> upper_rows(const FamilyParams& p) {
  const bool f1 = p.fiber == Fiber::F1;
  const FiberedDecomposition dec =
      f1 ? FiberedDecomposition{{attach_a1(), attach_a2(p.m), attach_a3(p.m, p.n)}}
         : f2_decomposition(p.m, p.n);
  const Mat2& a1 = dec.attaching[0];
  const Mat2& a2 = dec.attaching[1];
  const Mat2& a3 = dec.attaching[2];

  std::vector<UpperRow> rows;
  for (Int l = 0; l < p.m; ++l) {
    const Int u = p.m - l;
    UpperRow row;
    row.l = l;
    row.tw = -6 * u + 5;
    // Twisting on the first torus at this step: the common outside
    // denominator equals tw, read through the top row of its attaching map.
    row.n1 = exact_div(row.tw - a1.b, a1.a);
    const Int t = a1.a * row.n1 + a1.b;  // == row.tw

    Slope s1 = outside_slope(a1, canonical(1, row.n1));
    Slope s2 = canonical(u - 1, 6 * u - 5);  // second torus after l bypass steps
    Slope rounded = edge_round(numerator_over(s1, t), numerator_over(s2, t), t);
    row.slope_v3 = f1 ? rounded_to_v3(p.m, p.n, rounded)
                      : inside_slope(a3, reverse_orientation(rounded));
    row.slope_v2 = inside_slope(a2, s2);
    row.count = honda_count(row.slope_v3) * honda_count(row.slope_v2);
    rows.push_back(row);
  }
  return rows;
}

Int upper_bound(const FamilyParams& p) {
  Int total = 0;
  for (const UpperRow& row : upper_rows(p)) total += row.count;
  return total;
}

Int closed_form(const FamilyParams& p) {
  if (p.fiber == Fiber::F1)
    return exact_div((2 * p.m + p.n - 2) * (p.m + 1) * p.m, 2);
  return exact_div((4 * p.m - 4 + 3 * p.n) * (p.m + 1) * p.m, 6);
}

std::vector<MaxTwistEntry> max_twist_report(const Int& m, const Int& n, const Int& k_max) {
  if (m < 1 || n < 1) throw std::invalid_argument("max_twist_report: m, n must be >= 1");
  if (k_max < 0) throw std::invalid_argument("max_twist_report: k_max must be >= 0");
  std::vector<MaxTwistEntry> entries;
  for (Int k = 0; k <= k_max; ++k) {
    CommonTwist ct = solve_common_twist(m, k);
    MaxTwistEntry e;
    e.k = k;
    e.t = ct.t;
    if (k == 0) {
      e.verdict = "admissible";
      e.twist_bound = 0;
      e.detail = "tw = " + ct.t.get_str() + " is realized";
      entries.push_back(e);
      continue;
    }
    Slope s1 = outside_slope(attach_a1(), canonical(1, ct.n1));
    Slope s2 = outside_slope(attach_a2(m), canonical(1, ct.n2));
    Slope rounded = edge_round(numerator_over(s1, ct.t), numerator_over(s2, ct.t), ct.t);
    e.slope_v3 = rounded_to_v3(m, n, rounded);
    bool contradiction;
    if (k == 1) {
      // Rounded slope 1/2 for every m: infinite on d(V3), -1/2 outside.
      e.witness = reverse_orientation(rounded);
      e.twist_bound = -e.witness.den;
      contradiction = is_infinite(e.slope_v3) && e.twist_bound > ct.t;
      e.detail = "slope " + to_string(e.slope_v3, true) + " on dV3, " + to_string(e.witness, true) +
                 " on -d(M\\V3): twisting >= " + e.twist_bound.get_str();
    } else {
      // A torus of slope -1 around the third fiber, measured outside.
      e.witness = outside_slope(attach_a3(m, n), canonical(-1, 1));
      e.twist_bound = -e.witness.den;
      bool far_enough = !is_infinite(e.slope_v3) && e.slope_v3.num < -12 * e.slope_v3.den;
      contradiction = far_enough && e.twist_bound > ct.t;
      e.detail = "s_dV3 = " + to_string(e.slope_v3, true) + (far_enough ? " < -12" : " not < -12") +
                 "; -1-slope torus measures " + to_string(e.witness, true) +
                 " outside: twisting >= " + e.twist_bound.get_str();
    }
    e.verdict = contradiction ? "contradiction" : "inconclusive";
    e.detail += contradiction ? " > t = " + ct.t.get_str()
                              : "; no contradiction against t = " + ct.t.get_str();
    entries.push_back(e);
  }
  return entries;
}

TargetVerdict target_manifold(const FamilyParams& p) {
  TargetVerdict v;
  std::size_t leg = p.fiber == Fiber::F1 ? 0 : 1;
  v.surgered = meridian_surgery(base_manifold(p.m), leg, smooth_framing(p));
  const Int &m = p.m, &n = p.n;
  if (p.fiber == Fiber::F1)
    v.stated = seifert(-2, {canonical(3 * m + n - 2, 6 * m + 2 * n - 5), canonical(2, 3),
                            canonical(5 * m + 1, 6 * m + 1)});
  else
    v.stated = seifert(-2, {canonical(1, 2),
                            canonical(4 * (m - 1) + 2 * n + 1, 6 * (m - 1) + 3 * n + 1),
                            canonical(5 * m + 1, 6 * m + 1)});
  v.equivalent = is_equivalent(v.surgered, v.stated);
  return v;
}

CountReport count_report(const FamilyParams& p) {
  CountReport report;
  report.params = p;
  report.in_range = params_in_range(p);
  report.rows_lower = triangle(p);
  report.rows_upper = upper_rows(p);
  report.lower_total = 0;
  for (const TriangleRow& row : report.rows_lower)
    report.lower_total += row.structures * row.choices;
  report.upper_total = 0;
  for (const UpperRow& row : report.rows_upper) report.upper_total += row.count;
  report.closed = closed_form(p);
  report.agrees = report.lower_total == report.upper_total && report.upper_total == report.closed;
  return report;
}

}  // namespace sfs
