// sfscount: exact slope calculus and tight-contact-structure counts for the
// two Seifert fibered surgery families. Machine formats (json/csv) go to
// stdout and are byte-deterministic; diagnostics go to stderr.
//
// Exit codes: 0 success, 2 invalid input, 3 internal consistency failure.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sfs/family.hpp"
#include "sfs/negcf.hpp"
#include "sfs/render.hpp"
#include "sfs/seifert.hpp"
#include "sfs/transport.hpp"

namespace {

using namespace sfs;

struct Options {
  std::string format = "text";
  std::string matrix, slope, digits, seifert_a, seifert_b;
  std::string m = "1", n = "1", fiber = "F1", kmax = "4";
  std::string bound = "all", which = "upper";
  std::string leg = "1", framing;
};

NegCF parse_digits(const std::string& text) {
  NegCF cf;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    cf.digits.push_back(parse_int(
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cf;
}

void emit_scalar(OutputFormat fmt, const std::string& key, const std::string& value) {
  switch (fmt) {
    case OutputFormat::Text: std::cout << value << "\n"; break;
    case OutputFormat::Json: std::cout << dump_json(Json{{key, value}}); break;
    case OutputFormat::Csv: std::cout << key << "\n" << value << "\n"; break;
  }
}

void emit_seifert(OutputFormat fmt, const SeifertInvariants& inv) {
  switch (fmt) {
    case OutputFormat::Text: std::cout << to_string(inv) << "\n"; break;
    case OutputFormat::Json: std::cout << dump_json(to_json(inv)); break;
    case OutputFormat::Csv:
      std::cout << "e0,ratios\n" << inv.e0.get_str() << "," << csv_seifert_ratios(inv) << "\n";
      break;
  }
}

int run_family(const Options& opt, const std::string& action) {
  FamilyParams params =
      family_params(parse_int(opt.m), parse_int(opt.n), parse_fiber(opt.fiber));
  OutputFormat fmt = parse_format(opt.format);
  if (!params_in_range(params) && action != "maxtwist")
    std::cerr << "warning: n=" << params.n.get_str() << " is outside the theorem range for "
              << to_string(params.fiber) << "\n";

  if (action == "count") {
    if (opt.bound == "lower") { emit_scalar(fmt, "lower", lower_bound(params).get_str()); return 0; }
    if (opt.bound == "upper") { emit_scalar(fmt, "upper", upper_bound(params).get_str()); return 0; }
    if (opt.bound == "closed") { emit_scalar(fmt, "closed", closed_form(params).get_str()); return 0; }
    if (opt.bound != "all")
      throw std::invalid_argument("--bound must be lower, upper, closed or all");
    CountReport report = count_report(params);
    switch (fmt) {
      case OutputFormat::Text: std::cout << render_count_text(report); break;
      case OutputFormat::Json: std::cout << dump_json(to_json(report)); break;
      case OutputFormat::Csv: std::cout << render_count_csv(report); break;
    }
    if (!report.agrees) {
      std::cerr << "error: lower/upper/closed counts disagree\n";
      return 3;
    }
    return 0;
  }

  if (action == "table") {
    if (opt.which == "triangle") {
      auto rows = triangle(params);
      switch (fmt) {
        case OutputFormat::Text: std::cout << render_triangle_text(params, rows); break;
        case OutputFormat::Json: {
          Json j = Json::array();
          for (const auto& row : rows) j.push_back(to_json(row));
          std::cout << dump_json(j);
          break;
        }
        case OutputFormat::Csv: std::cout << render_triangle_csv(rows); break;
      }
      return 0;
    }
    if (opt.which != "upper")
      throw std::invalid_argument("--which must be triangle or upper");
    auto rows = upper_rows(params);
    switch (fmt) {
      case OutputFormat::Text: std::cout << render_upper_text(params, rows); break;
      case OutputFormat::Json: {
        Json j = Json::array();
        for (const auto& row : rows) j.push_back(to_json(row));
        std::cout << dump_json(j);
        break;
      }
      case OutputFormat::Csv: std::cout << render_upper_csv(rows); break;
    }
    return 0;
  }

  if (action == "maxtwist") {
    auto entries = max_twist_report(params.m, params.n, parse_int(opt.kmax));
    switch (fmt) {
      case OutputFormat::Text: std::cout << render_maxtwist_text(entries); break;
      case OutputFormat::Json: {
        Json j = Json::array();
        for (const auto& e : entries) j.push_back(to_json(e));
        std::cout << dump_json(j);
        break;
      }
      case OutputFormat::Csv: std::cout << render_maxtwist_csv(entries); break;
    }
    return 0;
  }

  // target
  TargetVerdict verdict = target_manifold(params);
  switch (fmt) {
    case OutputFormat::Text: std::cout << render_target_text(verdict); break;
    case OutputFormat::Json: std::cout << dump_json(to_json(verdict)); break;
    case OutputFormat::Csv: std::cout << render_target_csv(params, verdict); break;
  }
  if (!verdict.equivalent) {
    std::cerr << "error: surgered and stated presentations are not equivalent\n";
    return 3;
  }
  return 0;
}

int dispatch(const Options& opt, const std::string& group, const std::string& action) {
  OutputFormat fmt = parse_format(opt.format);

  if (group == "slope") {
    Mat2 m = parse_mat2(opt.matrix);
    Slope s = parse_slope(opt.slope);
    Slope result = action == "act" ? act(m, s) : act(invert(m), s);
    emit_scalar(fmt, "result", to_string(result));
    return 0;
  }

  if (group == "cf") {
    if (action == "expand") {
      NegCF cf = neg_cf(parse_slope(opt.slope));
      switch (fmt) {
        case OutputFormat::Text: {
          std::string out;
          for (std::size_t i = 0; i < cf.digits.size(); ++i)
            out += (i ? "," : "") + cf.digits[i].get_str();
          std::cout << "[" << out << "]\n";
          break;
        }
        case OutputFormat::Json: std::cout << dump_json(Json{{"digits", to_json(cf)}}); break;
        case OutputFormat::Csv: {
          std::string out;
          for (std::size_t i = 0; i < cf.digits.size(); ++i)
            out += (i ? ";" : "") + cf.digits[i].get_str();
          std::cout << "digits\n" << out << "\n";
          break;
        }
      }
      return 0;
    }
    if (action == "eval") {
      emit_scalar(fmt, "result", to_string(cf_eval(parse_digits(opt.digits))));
      return 0;
    }
    emit_scalar(fmt, "count", honda_count(parse_slope(opt.slope)).get_str());
    return 0;
  }

  if (group == "seifert") {
    if (action == "eq") {
      bool eq = is_equivalent(parse_seifert(opt.seifert_a), parse_seifert(opt.seifert_b));
      switch (fmt) {
        case OutputFormat::Text: std::cout << (eq ? "equivalent" : "not equivalent") << "\n"; break;
        case OutputFormat::Json: std::cout << dump_json(Json{{"equivalent", eq}}); break;
        case OutputFormat::Csv: std::cout << "equivalent\n" << (eq ? "true" : "false") << "\n"; break;
      }
      return 0;
    }
    SeifertInvariants inv = parse_seifert(opt.seifert_a);
    if (action == "normalize") {
      emit_seifert(fmt, normalize(inv));
      return 0;
    }
    if (action == "euler") {
      emit_scalar(fmt, "euler", to_string(euler_number(inv)));
      return 0;
    }
    // slamdunk
    std::optional<Int> framing;
    if (opt.framing != "inf") framing = parse_int(opt.framing);
    Int leg = parse_int(opt.leg);
    if (leg < 1 || leg > Int(inv.ratios.size()))
      throw std::invalid_argument("--leg out of range");
    emit_seifert(fmt, meridian_surgery(inv, leg.get_ui() - 1, framing));
    return 0;
  }

  return run_family(opt, action);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact slope calculus and tight contact structure counts for two "
               "families of small Seifert fibered spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // lets the global --format appear after a subcommand
  app.add_option("--format", opt.format, "output format: text, json or csv")
      ->capture_default_str();

  auto add_matrix = [&](CLI::App* cmd) {
    cmd->add_option("--matrix", opt.matrix, "matrix a,b,c,d (row-major, det +1)")->required();
    cmd->add_option("--slope", opt.slope, "slope p/q (or p, or inf)")->required();
  };
  CLI::App* slope_cmd = app.add_subcommand("slope", "projective matrix action on slopes");
  slope_cmd->require_subcommand(1);
  add_matrix(slope_cmd->add_subcommand("act", "apply the matrix to the slope"));
  add_matrix(slope_cmd->add_subcommand("inv", "apply the inverse matrix to the slope"));

  CLI::App* cf_cmd = app.add_subcommand("cf", "negative continued fractions and torus counts");
  cf_cmd->require_subcommand(1);
  cf_cmd->add_subcommand("expand", "negative continued fraction digits of a slope <= -1")
      ->add_option("--slope", opt.slope)->required();
  cf_cmd->add_subcommand("eval", "evaluate digits a0 - 1/(a1 - ...) exactly")
      ->add_option("--digits", opt.digits, "comma-separated digits, all <= -2 (or exactly -1)")
      ->required();
  cf_cmd->add_subcommand("count", "tight structures on a solid torus with this boundary slope")
      ->add_option("--slope", opt.slope)->required();

  CLI::App* seifert_cmd = app.add_subcommand("seifert", "Seifert invariant calculus");
  seifert_cmd->require_subcommand(1);
  seifert_cmd->add_subcommand("normalize", "canonical form: ratios in [0,1), floors into e0")
      ->add_option("--seifert", opt.seifert_a, "presentation \"M(e0; r1, r2, ...)\"")->required();
  CLI::App* eq_cmd = seifert_cmd->add_subcommand("eq", "equivalence of two presentations");
  eq_cmd->add_option("--a", opt.seifert_a)->required();
  eq_cmd->add_option("--b", opt.seifert_b)->required();
  seifert_cmd->add_subcommand("euler", "Euler number e0 + sum of ratios")
      ->add_option("--seifert", opt.seifert_a)->required();
  CLI::App* slam_cmd = seifert_cmd->add_subcommand("slamdunk", "meridian surgery on a leg");
  slam_cmd->add_option("--seifert", opt.seifert_a)->required();
  slam_cmd->add_option("--leg", opt.leg, "1-based leg index")->required();
  slam_cmd->add_option("--framing", opt.framing, "integer framing, or inf for no surgery")
      ->required();

  CLI::App* family_cmd = app.add_subcommand("family", "counts and tables for the two families");
  family_cmd->require_subcommand(1);
  auto add_params = [&](CLI::App* cmd, bool fiber) {
    cmd->add_option("--m", opt.m)->required();
    cmd->add_option("--n", opt.n)->required();
    if (fiber) cmd->add_option("--fiber", opt.fiber, "F1 or F2")->required();
  };
  CLI::App* count_cmd = family_cmd->add_subcommand("count", "lower/upper/closed-form counts");
  add_params(count_cmd, true);
  count_cmd->add_option("--bound", opt.bound, "lower, upper, closed or all")
      ->capture_default_str();
  CLI::App* table_cmd = family_cmd->add_subcommand("table", "lower-bound triangle or upper-bound table");
  add_params(table_cmd, true);
  table_cmd->add_option("--which", opt.which, "triangle or upper")->capture_default_str();
  CLI::App* mt_cmd = family_cmd->add_subcommand("maxtwist", "per-k maximal-twist verdicts");
  add_params(mt_cmd, false);
  mt_cmd->add_option("--kmax", opt.kmax)->capture_default_str();
  CLI::App* target_cmd =
      family_cmd->add_subcommand("target", "surgered vs stated Seifert presentations");
  add_params(target_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* group = app.get_subcommands().at(0);
    CLI::App* action = group->get_subcommands().at(0);
    return dispatch(opt, group->get_name(), action->get_name());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
