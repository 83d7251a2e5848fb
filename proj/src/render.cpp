#include "sfs/render.hpp"

#include <sstream>

namespace sfs {

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("format must be text, json or csv, got '" + text + "'");
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Slope& s) { return to_string(s); }

Json to_json(const SeifertInvariants& inv) {
  Json ratios = Json::array();
  for (const Slope& r : inv.ratios)
    ratios.push_back(Json{{"p", r.num.get_str()}, {"q", r.den.get_str()}});
  return Json{{"e0", inv.e0.get_str()}, {"ratios", ratios}};
}

Json to_json(const NegCF& cf) {
  Json digits = Json::array();
  for (const Int& d : cf.digits) digits.push_back(d.get_str());
  return digits;
}

Json to_json(const TriangleRow& row) {
  return Json{{"a", row.a.get_str()},
              {"structures", row.structures.get_str()},
              {"reg_twist", row.reg_twist.get_str()},
              {"fiber_twist", row.fiber_twist.get_str()},
              {"contact_coeff", row.contact_coeff.get_str()},
              {"choices", row.choices.get_str()}};
}

Json to_json(const UpperRow& row) {
  return Json{{"l", row.l.get_str()},          {"tw", row.tw.get_str()},
              {"n1", row.n1.get_str()},        {"slope_V3", to_string(row.slope_v3)},
              {"slope_V2", to_string(row.slope_v2)}, {"count", row.count.get_str()}};
}

Json to_json(const MaxTwistEntry& entry) {
  Json j{{"k", entry.k.get_str()}, {"t", entry.t.get_str()}, {"verdict", entry.verdict}};
  if (entry.k > 0) {
    j["slope_V3"] = to_string(entry.slope_v3);
    j["witness"] = to_string(entry.witness);
    j["twist_bound"] = entry.twist_bound.get_str();
  }
  j["detail"] = entry.detail;
  return j;
}

Json to_json(const CountReport& report) {
  Json triangle = Json::array(), upper = Json::array();
  for (const TriangleRow& row : report.rows_lower) triangle.push_back(to_json(row));
  for (const UpperRow& row : report.rows_upper) upper.push_back(to_json(row));
  return Json{{"m", report.params.m.get_str()},
              {"n", report.params.n.get_str()},
              {"fiber", to_string(report.params.fiber)},
              {"in_range", report.in_range},
              {"triangle", triangle},
              {"upper", upper},
              {"lower_total", report.lower_total.get_str()},
              {"upper_total", report.upper_total.get_str()},
              {"closed_form", report.closed.get_str()},
              {"agrees", report.agrees}};
}

Json to_json(const TargetVerdict& verdict) {
  return Json{{"surgered", to_json(verdict.surgered)},
              {"stated", to_json(verdict.stated)},
              {"equivalent", verdict.equivalent}};
}

std::string csv_seifert_ratios(const SeifertInvariants& inv) {
  std::string out;
  for (std::size_t i = 0; i < inv.ratios.size(); ++i)
    out += (i ? ";" : "") + to_string(inv.ratios[i]);
  return out;
}

static std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
  return out.str();
}

std::string render_triangle_csv(const std::vector<TriangleRow>& rows) {
  std::string out = "a,structures,reg_twist,fiber_twist,contact_coeff,choices\n";
  for (const TriangleRow& r : rows)
    out += r.a.get_str() + "," + r.structures.get_str() + "," + r.reg_twist.get_str() + "," +
           r.fiber_twist.get_str() + "," + r.contact_coeff.get_str() + "," + r.choices.get_str() +
           "\n";
  return out;
}

std::string render_upper_csv(const std::vector<UpperRow>& rows) {
  std::string out = "l,tw,n1,slope_V3,slope_V2,count\n";
  for (const UpperRow& r : rows)
    out += r.l.get_str() + "," + r.tw.get_str() + "," + r.n1.get_str() + "," +
           to_string(r.slope_v3) + "," + to_string(r.slope_v2) + "," + r.count.get_str() + "\n";
  return out;
}

std::string render_count_csv(const CountReport& report) {
  return "m,n,fiber,in_range,lower,upper,closed,agrees\n" + report.params.m.get_str() + "," +
         report.params.n.get_str() + "," + to_string(report.params.fiber) + "," +
         (report.in_range ? "true" : "false") + "," + report.lower_total.get_str() + "," +
         report.upper_total.get_str() + "," + report.closed.get_str() + "," +
         (report.agrees ? "true" : "false") + "\n";
}

std::string render_maxtwist_csv(const std::vector<MaxTwistEntry>& entries) {
  std::string out = "k,t,verdict,slope_V3,witness,twist_bound\n";
  for (const MaxTwistEntry& e : entries) {
    out += e.k.get_str() + "," + e.t.get_str() + "," + e.verdict + ",";
    if (e.k > 0)
      out += to_string(e.slope_v3) + "," + to_string(e.witness) + "," + e.twist_bound.get_str();
    else
      out += ",,";
    out += "\n";
  }
  return out;
}

std::string render_target_csv(const FamilyParams& params, const TargetVerdict& verdict) {
  return "m,n,fiber,e0_surgered,ratios_surgered,e0_stated,ratios_stated,equivalent\n" +
         params.m.get_str() + "," + params.n.get_str() + "," + to_string(params.fiber) + "," +
         verdict.surgered.e0.get_str() + "," + csv_seifert_ratios(verdict.surgered) + "," +
         verdict.stated.e0.get_str() + "," + csv_seifert_ratios(verdict.stated) + "," +
         (verdict.equivalent ? "true" : "false") + "\n";
}

std::string render_triangle_text(const FamilyParams& params, const std::vector<TriangleRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"structures", "tw(regular)", "tw(" + to_string(params.fiber) + ")",
                   "contact coeff", "choices"});
  for (const TriangleRow& r : rows) {
    std::string label = "xi_" + r.a.get_str() + "^{1.." + r.a.get_str() + "}";
    cells.push_back({label, r.reg_twist.get_str(), r.fiber_twist.get_str(),
                     r.contact_coeff.get_str(), r.choices.get_str()});
  }
  return table(cells);
}

std::string render_upper_text(const FamilyParams& params, const std::vector<UpperRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"tw(xi)", "n1", "slope on dV3", "slope on dV2", "count"});
  for (const UpperRow& r : rows)
    cells.push_back({r.tw.get_str(), r.n1.get_str(), to_string(r.slope_v3, true),
                     to_string(r.slope_v2, true), r.count.get_str()});
  (void)params;
  return table(cells);
}

std::string render_count_text(const CountReport& report) {
  std::ostringstream out;
  out << "family " << to_string(report.params.fiber) << "  m=" << report.params.m.get_str()
      << " n=" << report.params.n.get_str() << "\n";
  if (!report.in_range) out << "note: n is outside the theorem range for this family\n";
  out << "lower  = " << report.lower_total.get_str() << "\n";
  out << "upper  = " << report.upper_total.get_str() << "\n";
  out << "closed = " << report.closed.get_str() << "\n";
  out << "agrees: " << (report.agrees ? "yes" : "NO") << "\n";
  return out.str();
}

std::string render_maxtwist_text(const std::vector<MaxTwistEntry>& entries) {
  std::ostringstream out;
  for (const MaxTwistEntry& e : entries)
    out << "k=" << e.k.get_str() << " (t=" << e.t.get_str() << "): " << e.verdict << ": "
        << e.detail << "\n";
  return out.str();
}

std::string render_target_text(const TargetVerdict& verdict) {
  std::ostringstream out;
  out << "surgered: " << to_string(verdict.surgered) << "\n";
  out << "stated:   " << to_string(verdict.stated) << "\n";
  out << "equivalent: " << (verdict.equivalent ? "yes" : "NO") << "\n";
  return out.str();
}

}  // namespace sfs
