#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "format.hpp"
#include "fri/benchmark.hpp"
#include "fri/cnf.hpp"
#include "fri/errors.hpp"
#include "fri/kh.hpp"
#include "fri/rulebase_io.hpp"

namespace fri::cli {

namespace {

std::string_view segment_label(Segment seg) {
  switch (seg) {
    case Segment::LeftBoundary:
      return "LTB";
    case Segment::Core:
      return "Core";
    case Segment::RightBoundary:
      return "RTB";
  }
  return "?";
}

std::string tags_text(const CaseTags& tags) {
  std::vector<std::string> names;
  if (tags.case1) names.emplace_back("CASE1");
  if (tags.case2) names.emplace_back("CASE2");
  if (tags.case3) names.emplace_back("CASE3");
  if (tags.corollary4) names.emplace_back("COROLLARY4");
  if (names.empty()) return "(none)";
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

std::string value_text(const bench::CheckValue& v, int decimals) {
  if (const double* d = std::get_if<double>(&v)) return fixed(*d, decimals);
  return std::get<std::string>(v);
}

std::string csv_value(const bench::CheckValue& v) {
  if (const double* d = std::get_if<double>(&v)) return full_precision(*d);
  return std::get<std::string>(v);
}

std::string comparison(double lhs, double rhs, int decimals) {
  return fixed(lhs, decimals) + (lhs <= rhs + kTolerance ? " <= " : " > ") + fixed(rhs, decimals);
}

std::string ratio_text(const RatioDiagnostics& r, int decimals) {
  const std::string r1 = r.ratio1 ? fixed(*r.ratio1, decimals) : "undefined";
  const std::string r2 = r.ratio2 ? fixed(*r.ratio2, decimals) : "undefined";
  const char* op = r.verdict == RatioVerdict::Normal ? " <= " : (r.verdict == RatioVerdict::Problem ? " > " : " ? ");
  return r1 + op + r2 + ", " + std::string(to_string(r.verdict));
}

void print_sweep(const bench::SweepOracleResult& s, int levels, int decimals, std::ostream& out) {
  out << "Alpha sweep (" << levels << " levels): min gap " << fixed(s.min_gap, decimals) << " at alpha "
      << fixed(s.gap_argmin, decimals) << ", inf monotone " << (s.inf_monotone ? "yes" : "no") << ", sup monotone "
      << (s.sup_monotone ? "yes" : "no") << ", inverted levels " << s.abnormal_levels.size() << "\n";
}

void print_table_verdicts(const NormalityReport& report, std::ostream& out) {
  for (Segment seg : kSegments) {
    out << "  The length (" << table_name(seg) << ") is (" << to_string(report.at(seg).length.verdict) << ")\n";
  }
}

void print_case(const bench::BenchmarkCase& c, const bench::CaseReport& r, const BenchOptions& options,
                std::ostream& out) {
  const int dp = options.display.decimals;
  out << "== Example " << c.id << ": " << c.name << " [" << (r.passed() ? "PASS" : "FAIL") << "]\n";
  std::array<double, 4> expected{};
  for (std::size_t j = 0; j < 4; ++j) expected[j] = c.expected_points[j].value;
  out << "  B* computed " << bracketed(r.report.points.y, dp) << "  expected " << bracketed(expected, dp) << "\n";
  out << "  segment  path             length1 / length2        ratio1 / ratio2          verdict  expected  direct\n";
  for (Segment seg : kSegments) {
    const auto& s = r.report.at(seg);
    const auto& want = c.expected_segments[index_of(seg)];
    std::ostringstream row;
    row << "  " << std::left;
    row.width(9);
    row << to_string(seg);
    row.width(17);
    row << to_string(s.length.path);
    row.width(25);
    row << (fixed(s.length.length1, dp) + " / " + fixed(s.length.length2, dp));
    row.width(25);
    row << ((s.ratio.ratio1 ? fixed(*s.ratio.ratio1, dp) : "undef") + " / " +
            (s.ratio.ratio2 ? fixed(*s.ratio.ratio2, dp) : "undef"));
    row.width(9);
    row << to_string(s.length.verdict);
    row.width(10);
    row << to_string(want.verdict);
    row << to_string(s.direct);
    out << row.str() << "\n";
  }
  print_table_verdicts(r.report, out);
  for (const auto& cmp : bench::compare_reference(c)) {
    out << "  ref " << cmp.method << ": " << cmp.verbatim;
    switch (cmp.status) {
      case bench::ReferenceStatus::Match:
        out << "  (computed " << bracketed(cmp.computed->y, dp) << ", match)";
        break;
      case bench::ReferenceStatus::Mismatch:
        out << "  (computed " << bracketed(cmp.computed->y, dp) << ", MISMATCH)";
        break;
      case bench::ReferenceStatus::ReferenceOnly:
        out << "  (reference only)";
        break;
    }
    out << "\n";
  }
  if (options.sweep_levels) {
    out << "  ";
    print_sweep(bench::sweep_oracle(c.lower, c.upper, c.observation, *options.sweep_levels), *options.sweep_levels,
                dp, out);
  }
  for (const auto& check : r.checks) {
    if (check.pass) continue;
    out << "  mismatch " << check.segment << " " << check.metric << ": computed " << value_text(check.computed, dp)
        << ", expected " << value_text(check.expected, dp);
    if (check.deviation) out << ", deviation " << fixed(*check.deviation, dp) << " > " << check.tolerance;
    out << "\n";
  }
  out << "  checks " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " passed\n";
}

struct LoadedInput {
  io::RuleBaseDocument doc;
  RuleBase rb;
  Observation obs;
};

LoadedInput load_input(const std::filesystem::path& path) {
  io::RuleBaseDocument doc = io::load_file(path);
  RuleBase rb = doc.rule_base();
  auto obs = doc.observation_sets();
  if (!obs) throw ValidationError("document has no observation");
  return {std::move(doc), std::move(rb), std::move(*obs)};
}

int input_error(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return kUsageError;
}

}  // namespace

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<bench::BenchmarkCase> selected;
  if (options.case_id) {
    try {
      selected.push_back(bench::builtin_case(*options.case_id));
    } catch (const std::out_of_range&) {
      err << "error: no benchmark case " << *options.case_id << " (valid ids are 1-9)\n";
      return kUsageError;
    }
  } else {
    selected = bench::builtin_cases();
  }

  const bench::BenchmarkReport report = bench::run_cases(selected);
  for (std::size_t i = 0; i < selected.size(); ++i) print_case(selected[i], report.cases[i], options, out);
  out << "Summary: " << report.passed() << "/" << report.cases.size() << " cases passed\n";

  if (options.csv_path) {
    std::ofstream csv(*options.csv_path, std::ios::binary);
    if (!csv) {
      err << "error: cannot write " << options.csv_path->string() << "\n";
      return kUsageError;
    }
    csv << "case_id,segment,metric,computed,expected,deviation,pass\n";
    for (const auto& c : report.cases) {
      for (const auto& check : c.checks) {
        csv << c.id << ',' << check.segment << ',' << check.metric << ',' << csv_value(check.computed) << ','
            << csv_value(check.expected) << ',' << (check.deviation ? full_precision(*check.deviation) : "") << ','
            << (check.pass ? "true" : "false") << '\n';
      }
    }
    if (!csv) {
      err << "error: write failed for " << options.csv_path->string() << "\n";
      return kUsageError;
    }
  }
  return report.all_passed() ? kSuccess : kFindings;
}

int cmd_interpolate(const InterpolateOptions& options, std::ostream& out, std::ostream& err) {
  if (options.method != "kh" && options.method != "khstab") {
    err << "error: unknown method '" << options.method << "' (expected kh or khstab)\n";
    return kUsageError;
  }
  const int dp = options.display.decimals;
  try {
    const LoadedInput in = load_input(options.input);
    const FlankingRules flank = select_flanking(in.rb, in.obs);
    const ConclusionPoints pts = options.method == "kh"
                                     ? kh_characteristic_points(*flank.lower, *flank.upper, in.obs)
                                     : khstab_points(in.rb, in.obs, 1.0);

    out << "Rule base: " << in.rb.size() << " rules, dimension " << in.rb.dimension() << "\n";
    out << "Flanking rules: " << flank.lower_index + 1 << " (lower), " << flank.upper_index + 1 << " (upper)\n";
    out << "Method: " << (options.method == "kh" ? "KH" : "KHstab") << "\n";
    out << "Conclusion points: " << bracketed(pts.y, dp) << "\n";

    const Conclusion conclusion = assemble_conclusion(pts);
    if (const auto* normal = std::get_if<NormalConclusion>(&conclusion)) {
      const auto& s = normal->set;
      out << "Conclusion: NORMAL " << (s.is_singleton() ? "singleton" : s.is_triangle() ? "triangle" : "trapezoid")
          << " " << bracketed(s.points(), dp) << "\n";
    } else {
      out << "Conclusion: ABNORMAL";
      for (const auto& p : std::get<AbnormalConclusion>(conclusion).points) {
        out << " (" << fixed(p.x, dp) << ", " << fixed(p.grade, dp) << ")";
      }
      out << "\n";
    }

    if (in.rb.dimension() == 1) {
      const NormalityReport report = make_report(*flank.lower, *flank.upper, in.obs, pts);
      out << "Normality report:\n";
      for (Segment seg : kSegments) {
        const auto& s = report.at(seg);
        out << "  " << segment_label(seg) << ": " << to_string(s.length.verdict) << " (" << to_string(s.length.path)
            << ", " << comparison(s.length.length1, s.length.length2, dp) << "; ratio "
            << ratio_text(s.ratio, dp) << "; direct " << to_string(s.direct) << ")\n";
      }
      print_table_verdicts(report, out);
      out << "  Cases: " << tags_text(report.cases) << "\n";
      out << "  Overall: " << to_string(report.overall) << "\n";
    } else {
      const auto direct = direct_normality(pts);
      out << "Normality report: length conditions need 1-D rules; direct verdicts only\n";
      for (Segment seg : kSegments) {
        out << "  " << segment_label(seg) << ": " << to_string(direct[index_of(seg)]) << " (direct)\n";
      }
    }

    if (options.sweep_levels) {
      print_sweep(bench::sweep_oracle(*flank.lower, *flank.upper, in.obs, *options.sweep_levels),
                  *options.sweep_levels, dp, out);
    }
  } catch (const Error& e) {
    return input_error(e, err);
  }
  return kSuccess;
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
  const int dp = options.display.decimals;
  NormalityReport report;
  try {
    const LoadedInput in = load_input(options.input);
    const FlankingRules flank = select_flanking(in.rb, in.obs);
    report = full_report(*flank.lower, *flank.upper, in.obs);
  } catch (const Error& e) {
    return input_error(e, err);
  }

  for (Segment seg : kSegments) {
    const auto& s = report.at(seg);
    out << segment_label(seg) << ": " << to_string(s.length.path) << ", "
        << comparison(s.length.length1, s.length.length2, dp) << ", " << to_string(s.length.verdict) << "\n";
    out << "  ratio: " << ratio_text(s.ratio, dp) << "\n";
  }
  out << "Cases: " << tags_text(report.cases) << "\n";
  out << "Overall: " << to_string(report.overall) << "\n";
  return report.overall == Verdict::Normal ? kSuccess : kFindings;
}

namespace {

struct Panel {
  double left;
  double width;
  double lo;
  double hi;
};

constexpr double kSvgWidth = 800;
constexpr double kSvgHeight = 300;
constexpr double kPlotTop = 50;
constexpr double kPlotBottom = 250;
constexpr double kPanelMargin = 40;

std::string coord(double v) { return fixed(v, 2); }

double map_x(const Panel& p, double x) { return p.left + (x - p.lo) / (p.hi - p.lo) * p.width; }
double map_y(double grade) { return kPlotBottom - grade * (kPlotBottom - kPlotTop); }

Panel make_panel(double left, std::initializer_list<double> xs) {
  double lo = *std::min_element(xs.begin(), xs.end());
  double hi = *std::max_element(xs.begin(), xs.end());
  const double pad = std::max(0.5, 0.05 * (hi - lo));
  return {left + kPanelMargin, kSvgWidth / 2 - 2 * kPanelMargin, lo - pad, hi + pad};
}

void polyline(std::ostream& svg, const Panel& p, const GradedPointList& pts, const char* colour, const char* extra) {
  svg << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"" << extra << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    svg << (i ? " " : "") << coord(map_x(p, pts[i].x)) << "," << coord(map_y(pts[i].grade));
  }
  svg << "\"/>\n";
}

void label(std::ostream& svg, double x, double y, const std::string& text, const char* anchor = "middle") {
  svg << "  <text x=\"" << coord(x) << "\" y=\"" << coord(y) << "\" text-anchor=\"" << anchor
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << text << "</text>\n";
}

void axes(std::ostream& svg, const Panel& p, const std::string& title) {
  svg << "  <line x1=\"" << coord(p.left) << "\" y1=\"" << coord(kPlotBottom) << "\" x2=\"" << coord(p.left + p.width)
      << "\" y2=\"" << coord(kPlotBottom) << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << coord(p.left) << "\" y1=\"" << coord(kPlotBottom) << "\" x2=\"" << coord(p.left)
      << "\" y2=\"" << coord(kPlotTop - 10) << "\" stroke=\"black\"/>\n";
  label(svg, p.left - 6, map_y(1.0) + 4, "1", "end");
  label(svg, p.left - 6, map_y(0.0) + 4, "0", "end");
  label(svg, p.left, kPlotBottom + 18, fixed(p.lo, 2));
  label(svg, p.left + p.width, kPlotBottom + 18, fixed(p.hi, 2));
  label(svg, p.left + p.width / 2, 25, title);
}

void set_label(std::ostream& svg, const Panel& p, const TrapezoidSet& s, const std::string& name) {
  label(svg, map_x(p, 0.5 * (s.a2() + s.a3())), map_y(1.0) - 6, name);
}

}  // namespace

std::string render_svg(const std::filesystem::path& input) {
  const LoadedInput in = load_input(input);
  if (in.rb.dimension() != 1) throw DimensionError("plot supports 1-D rule bases only");
  const FlankingRules flank = select_flanking(in.rb, in.obs);
  const Rule& r1 = *flank.lower;
  const Rule& r2 = *flank.upper;
  const TrapezoidSet& a1 = r1.antecedent(0);
  const TrapezoidSet& a2 = r2.antecedent(0);
  const TrapezoidSet& x = in.obs[0];
  const ConclusionPoints pts = kh_characteristic_points(r1, r2, in.obs);
  const GradedPointList conclusion = {{pts[0], 0.0}, {pts[1], 1.0}, {pts[2], 1.0}, {pts[3], 0.0}};
  const bool normal = pts.is_monotone();

  const Panel left = make_panel(0, {a1.a1(), a2.a4(), x.a1(), x.a4()});
  const Panel right = make_panel(kSvgWidth / 2, {r1.consequent().a1(), r2.consequent().a4(), pts[0], pts[1], pts[2],
                                                 pts[3]});

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight
      << "\" viewBox=\"0 0 " << kSvgWidth << " " << kSvgHeight << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  axes(svg, left, "Antecedents and observation");
  axes(svg, right, normal ? "Consequents and conclusion" : "Consequents and conclusion (abnormal)");
  polyline(svg, left, to_graded_points(a1), "#1f77b4", "");
  polyline(svg, left, to_graded_points(a2), "#1f77b4", "");
  polyline(svg, left, to_graded_points(x), "#d62728", "");
  set_label(svg, left, a1, "A1");
  set_label(svg, left, a2, "A2");
  set_label(svg, left, x, "A*");
  polyline(svg, right, to_graded_points(r1.consequent()), "#1f77b4", "");
  polyline(svg, right, to_graded_points(r2.consequent()), "#1f77b4", "");
  polyline(svg, right, conclusion, "#d62728", normal ? "" : " stroke-dasharray=\"6,3\"");
  set_label(svg, right, r1.consequent(), "B1");
  set_label(svg, right, r2.consequent(), "B2");
  label(svg, map_x(right, 0.5 * (pts[1] + pts[2])), map_y(1.0) - 6, "B*");
  svg << "</svg>\n";
  return svg.str();
}

int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err) {
  std::string svg;
  try {
    svg = render_svg(options.input);
  } catch (const Error& e) {
    return input_error(e, err);
  }
  std::ofstream file(options.output, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << options.output.string() << "\n";
    return kUsageError;
  }
  file << svg;
  if (!file) {
    err << "error: write failed for " << options.output.string() << "\n";
    return kUsageError;
  }
  out << "wrote " << options.output.string() << "\n";
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy rule interpolation lab: KH interpolation, CNF validation and the normality benchmark"};
  app.name(args.empty() ? "fri-lab" : std::filesystem::path(args.front()).filename().string());
  app.require_subcommand(1);

  int decimals = 4;
  app.add_option("--decimals", decimals, "Decimals for rendered numbers (round half to even)")
      ->check(CLI::Range(0, 17));

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Run the nine built-in benchmark cases");
  bench_cmd->add_option("--case", bench_opts.case_id, "Run a single case (1-9)");
  bench_cmd->add_option("--csv", bench_opts.csv_path, "Write per-metric comparison rows to a CSV file");
  bench_cmd->add_option("--sweep", bench_opts.sweep_levels, "Add an alpha-sweep with N levels")
      ->check(CLI::Range(2, 10000000));

  InterpolateOptions interp_opts;
  auto* interp_cmd = app.add_subcommand("interpolate", "Interpolate the observation of a rule-base document");
  interp_cmd->add_option("file", interp_opts.input, "Rule-base document")->required();
  interp_cmd->add_option("--method", interp_opts.method, "kh or khstab")
      ->check(CLI::IsMember({"kh", "khstab"}));
  interp_cmd->add_option("--sweep", interp_opts.sweep_levels, "Add an alpha-sweep with N levels")
      ->check(CLI::Range(2, 10000000));

  ValidateOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "Check the normality conditions of a rule-base document");
  validate_cmd->add_option("file", validate_opts.input, "Rule-base document")->required();

  PlotOptions plot_opts;
  auto* plot_cmd = app.add_subcommand("plot", "Draw antecedents and the interpolated conclusion as SVG");
  plot_cmd->add_option("file", plot_opts.input, "Rule-base document")->required();
  plot_cmd->add_option("-o,--output", plot_opts.output, "Output SVG path")->required();

  for (auto* sub : {bench_cmd, interp_cmd, validate_cmd, plot_cmd}) {
    sub->add_option("--decimals", decimals, "Decimals for rendered numbers (round half to even)")
        ->check(CLI::Range(0, 17));
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const DisplayOptions display{decimals};
  if (*bench_cmd) {
    bench_opts.display = display;
    return cmd_bench(bench_opts, out, err);
  }
  if (*interp_cmd) {
    interp_opts.display = display;
    return cmd_interpolate(interp_opts, out, err);
  }
  if (*validate_cmd) {
    validate_opts.display = display;
    return cmd_validate(validate_opts, out, err);
  }
  return cmd_plot(plot_opts, out, err);
}

}  // namespace fri::cli
