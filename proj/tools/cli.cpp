#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sawstrip/accel.hpp"
#include "sawstrip/analysis.hpp"
#include "sawstrip/errors.hpp"
#include "sawstrip/oracles.hpp"
#include "sawstrip/record_io.hpp"
#include "sawstrip/reference_data.hpp"
#include "sawstrip/strip_enum.hpp"

namespace sawstrip::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string command;
  std::string report;
  std::string lattice = "square";
  std::string widths;
  int max_degree = 600;
  int half_length = -1;
  std::string precision = "high";
  int workers = 1;
  int width_bound = -1;
  std::string output_dir;
  std::string output;
  std::vector<std::string> positional;
  std::string z;
  std::string lambda;
  std::string closed_form;
  bool compare_paper = false;
  std::string z_min;
  std::string z_max;
  int points = 0;
  std::string method = "bs";
  double w = 1.0;
  std::string values;
  double first_T = 1.0;
  std::string from_report;
  std::string column;
  double plot_exponent = 0.85;
  int fit_last = 0;
  std::string limit;
  double exponent = 2.0;
  std::string bracket_lo;
  std::string bracket_hi;
  bool check = false;
};

// Command line without output destinations, so a rerun reproduces it.
std::vector<std::string> replayable(const std::vector<std::string>& argv) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--output" || argv[i] == "-o") {
      ++i;
      continue;
    }
    if (argv[i].rfind("--output=", 0) == 0) continue;
    out.push_back(argv[i]);
  }
  return out;
}

Json config_json(const Options& o, const std::vector<std::string>& argv) {
  Json c;
  c["command"] = o.command;
  if (o.command == "analyze") {
    c["report"] = o.report;
    c["inputs"] = o.positional;
    if (!o.closed_form.empty()) c["closed_form"] = o.closed_form;
    if (!o.z.empty()) c["z"] = o.z;
    if (!o.lambda.empty()) c["lambda"] = o.lambda;
    if (o.report == "extrapolate") {
      c["method"] = o.method;
      c["w"] = o.w;
    }
  } else {
    c["lattice"] = o.lattice;
    c["widths"] = o.widths;
    c["M"] = o.max_degree;
    c["L"] = o.half_length < 0 ? o.max_degree : o.half_length;
    c["precision"] = o.command == "oracle" ? "exact" : o.precision;
  }
  c["argv"] = replayable(argv);
  return c;
}

std::string fmt(const DD& x, int digits = 20) { return to_decimal_string(x, digits); }

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// "3", "1-4" or "0,2,5".
std::vector<int> parse_widths(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) throw SpecError("no widths given (use --width)");
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      const auto dash = part.find('-', 1);
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int a = std::stoi(part.substr(0, dash));
        const int b = std::stoi(part.substr(dash + 1));
        if (b < a) throw SpecError("empty width range '" + part + "'");
        for (int t = a; t <= b; ++t) out.push_back(t);
      }
    }
  } catch (const std::logic_error&) {
    throw SpecError("malformed width list '" + text + "'");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DD> parse_values(const std::string& text) {
  std::vector<DD> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(parse_decimal(part));
  }
  return out;
}

fs::path default_output_dir(const Options& o) {
  if (!o.output_dir.empty()) return o.output_dir;
  if (const char* env = std::getenv("SAWSTRIP_OUTPUT_DIR"); env && *env) return env;
  return ".";
}

void emit(const Options& o, const Report& report, std::ostream& out) {
  const std::string csv = report.to_csv();
  if (o.output.empty()) {
    out << csv;
  } else {
    write_text(o.output, csv);
  }
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(const Options& o, std::ostream& out) {
  StripSpec base;
  base.lattice = parse_lattice(o.lattice);
  base.max_degree = o.max_degree;
  base.half_length = o.half_length < 0 ? o.max_degree : o.half_length;
  base.precision = parse_precision(o.precision);
  base.width_bound = o.width_bound;
  validate(base);  // L, M and lattice errors take precedence over a missing width
  const std::vector<int> widths = parse_widths(o.widths);
  for (const int T : widths) {  // reject every bad width before computing any
    StripSpec s = base;
    s.width = T;
    validate(s);
  }
  const fs::path dir = default_output_dir(o);
  for (const int T : widths) {
    StripSpec s = base;
    s.width = T;
    const GFRecord rec = enumerate(s, {o.workers});
    const fs::path path = dir / record_file_name(s);
    write_record(rec, path);
    out << path.string() << "  (" << rec.meta.peak_states << " states, " << rec.meta.wall_seconds << " s)\n";
  }
  return ok;
}

// ---- analyze ---------------------------------------------------------------

struct Inputs {
  LatticeKind lattice = LatticeKind::square;
  std::vector<StripEvaluator> gfs;  // ascending width
  PrecisionMode precision = PrecisionMode::high;
};

Inputs load_inputs(const Options& o, const std::vector<std::string>& files) {
  Inputs in;
  if (!o.closed_form.empty()) {
    in.lattice = LatticeKind::honeycomb;
    for (const int T : parse_widths(o.closed_form)) in.gfs.push_back(StripEvaluator::honeycomb_closed_form(T));
    return in;
  }
  if (files.empty()) throw InputError("no GF record files given");
  for (const auto& f : files) in.gfs.push_back(StripEvaluator::from_record(read_record(f)));
  std::sort(in.gfs.begin(), in.gfs.end(), [](const auto& a, const auto& b) { return a.width() < b.width(); });
  in.lattice = in.gfs.front().lattice();
  for (const auto& g : in.gfs) {
    if (g.lattice() != in.lattice) throw InputError("input records mix lattices");
    if (g.normalization() != in.gfs.front().normalization()) {
      throw InputError("input records mix normalizations ('" + g.normalization() + "' vs '" +
                       in.gfs.front().normalization() + "')");
    }
    if (g.precision() == PrecisionMode::fast) in.precision = PrecisionMode::fast;
  }
  for (std::size_t i = 1; i < in.gfs.size(); ++i) {
    if (in.gfs[i].width() == in.gfs[i - 1].width()) {
      throw InputError("two records for width " + std::to_string(in.gfs[i].width()));
    }
  }
  return in;
}

DD eval_point(const Options& o, LatticeKind kind) {
  return o.z.empty() ? LatticeConstants::zc_reference(kind) : parse_decimal(o.z);
}

Bracket bracket_for(const Options& o, LatticeKind kind) {
  Bracket b = default_bracket(kind);
  if (!o.bracket_lo.empty()) b.lo = parse_decimal(o.bracket_lo);
  if (!o.bracket_hi.empty()) b.hi = parse_decimal(o.bracket_hi);
  return b;
}

// Index runs of `size` consecutive widths.
std::vector<std::size_t> consecutive_runs(const Inputs& in, std::size_t size, const char* what) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i + size <= in.gfs.size(); ++i) {
    bool run = true;
    for (std::size_t k = 1; k < size; ++k) run = run && in.gfs[i + k].width() == in.gfs[i].width() + static_cast<int>(k);
    if (run) starts.push_back(i);
  }
  if (starts.empty()) {
    throw InputError(std::string(what) + " needs " + std::to_string(size) + " adjacent widths");
  }
  return starts;
}

Report analyze_table(const Options& o, const Inputs& in) {
  Report r;
  const DD z = eval_point(o, in.lattice);
  r.columns = {"T", "A_T(zc)", "B_T(zc)"};
  if (o.compare_paper) r.columns.insert(r.columns.end(), {"ref_A", "ref_B", "diff_A", "diff_B"});
  for (const auto& g : in.gfs) {
    const DD a = g.A(z), b = g.B(z);
    std::vector<std::string> row{std::to_string(g.width()), fmt(a), fmt(b)};
    if (o.compare_paper) {
      const ReferenceRow* ref = reference_data().critical_row(in.lattice, g.width());
      if (ref) {
        row.insert(row.end(), {fmt(ref->first, 16), fmt(ref->second, 16), fmt(a - ref->first, 3), fmt(b - ref->second, 3)});
      } else {
        row.insert(row.end(), {"", "", "", ""});
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Report analyze_intersect(const Options& o, const Inputs& in) {
  Report r;
  r.columns = {"T", "zc(T)"};
  for (const std::size_t i : consecutive_runs(in, 2, "zc-intersect")) {
    const DD zc = intersect_zc(in.gfs[i], in.gfs[i + 1], bracket_for(o, in.lattice), root_options_for(in.precision));
    r.rows.push_back({std::to_string(in.gfs[i].width()), fmt(zc)});
  }
  return r;
}

Report analyze_lambda(const Options& o, const Inputs& in) {
  Report r;
  r.columns = {"T", "zc(T)", "lambda(T)"};
  if (o.compare_paper) r.columns.insert(r.columns.end(), {"ref_zc", "ref_lambda", "diff_zc", "diff_lambda"});
  for (const std::size_t i : consecutive_runs(in, 3, "zc-lambda")) {
    const IntersectResult res = solve_lambda_zc(in.gfs[i], in.gfs[i + 1], in.gfs[i + 2], bracket_for(o, in.lattice),
                                                root_options_for(in.precision));
    std::vector<std::string> row{std::to_string(res.T), fmt(res.zc), fmt(*res.lambda)};
    if (o.compare_paper) {
      const ReferenceRow* ref = reference_data().lambda_free_row(in.lattice, res.T);
      if (ref) {
        row.insert(row.end(), {fmt(ref->first, 16), fmt(ref->second, 16), fmt(res.zc - ref->first, 3),
                               fmt(*res.lambda - ref->second, 3)});
      } else {
        row.insert(row.end(), {"", "", "", ""});
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Report analyze_fit(const Options& o, const Inputs& in) {
  Report r;
  const DD z = eval_point(o, in.lattice);
  r.columns = {"T", "c_alpha", "c_beta", "ratio"};
  for (const std::size_t i : consecutive_runs(in, 2, "fit-cab")) {
    const FitResult f = fit_cab(in.gfs[i], in.gfs[i + 1], z);
    r.rows.push_back({std::to_string(f.T), fmt(f.c_alpha), fmt(f.c_beta), fmt(f.ratio)});
  }
  return r;
}

Report analyze_gradB(const Options& o, const Inputs& in) {
  Report r;
  const DD z = eval_point(o, in.lattice);
  IndexedSequence b;
  for (const auto& g : in.gfs) {
    if (g.width() < 1) continue;
    b.T.push_back(g.width());
    b.values.push_back(g.B(z));
  }
  const IndexedSequence grad = local_gradient(b);
  r.columns = {"T", "B_T(zc)", "gradB(T)", "T^-p"};
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < grad.T.size(); ++i) {
    const double x = std::pow(grad.T[i], -o.plot_exponent);
    r.rows.push_back({fmt_double(grad.T[i]), fmt(b.values[i + 1]), fmt(grad.values[i]), fmt_double(x)});
    xs.push_back(x);
    ys.push_back(static_cast<double>(grad.values[i]));
  }
  if (o.fit_last > 0 && static_cast<std::size_t>(o.fit_last) < xs.size()) {
    xs.erase(xs.begin(), xs.end() - o.fit_last);
    ys.erase(ys.begin(), ys.end() - o.fit_last);
  }
  if (xs.size() >= 2) {
    const LineFit f = fit_line(xs, ys);
    r.rows.push_back({"intercept", "", fmt_double(f.intercept), fmt_double(f.slope)});
  }
  return r;
}

Report analyze_scan(const Options& o, const Inputs& in) {
  std::string lo = o.z_min, hi = o.z_max;
  int n = o.points;
  if (lo.empty() || hi.empty() || n < 2) throw SpecError("combo-scan needs z_min z_max n_points (n >= 2)");
  const DD a = parse_decimal(lo), b = parse_decimal(hi);
  const DD lambda = o.lambda.empty() ? LatticeConstants::lambda_hc() : parse_decimal(o.lambda);
  Report r;
  r.columns = {"z"};
  for (const auto& g : in.gfs) r.columns.push_back("combo_T" + std::to_string(g.width()));
  for (int i = 0; i < n; ++i) {
    const DD z = a + (b - a) * DD(i) / DD(n - 1);
    std::vector<std::string> row{fmt(z, 17)};
    for (const auto& g : in.gfs) row.push_back(fmt(combo(g, z, lambda), 17));
    r.rows.push_back(std::move(row));
  }
  return r;
}

IndexedSequence sequence_for_extrapolation(const Options& o) {
  if (!o.values.empty()) return IndexedSequence::consecutive(0, parse_values(o.values));
  if (o.from_report.empty()) throw SpecError("extrapolate needs --values or --from-report with --column");
  const Report src = Report::parse_csv(read_text(o.from_report));
  const auto col = std::find(src.columns.begin(), src.columns.end(), o.column);
  if (o.column.empty() || col == src.columns.end()) {
    throw InputError("report has no column '" + o.column + "'");
  }
  const auto idx = static_cast<std::size_t>(col - src.columns.begin());
  const auto tcol = std::find(src.columns.begin(), src.columns.end(), "T");
  IndexedSequence seq;
  for (const auto& row : src.rows) {
    if (idx >= row.size() || row[idx].empty()) continue;
    if (tcol != src.columns.end()) {
      const std::string& t = row[static_cast<std::size_t>(tcol - src.columns.begin())];
      if (t.empty() || !std::isdigit(static_cast<unsigned char>(t[0]))) continue;
      seq.T.push_back(std::stod(t));
    }
    seq.values.push_back(parse_decimal(row[idx]));
  }
  if (seq.T.empty()) {
    for (std::size_t i = 0; i < seq.values.size(); ++i) seq.T.push_back(static_cast<double>(i));
  }
  return seq;
}

Report analyze_extrapolate(const Options& o) {
  IndexedSequence seq = sequence_for_extrapolation(o);
  if (!o.values.empty()) {
    for (std::size_t i = 0; i < seq.T.size(); ++i) seq.T[i] = o.first_T + static_cast<double>(i);
  }
  const AccelMethod method = parse_accel_method(o.method);
  const AccelTableau t = accelerate(seq, method, o.w);
  Report r;
  r.columns = {"method", "w", "n", "limit", "uncertainty", "truncated"};
  r.rows.push_back({to_string(method), fmt_double(o.w), std::to_string(seq.values.size()), fmt(t.limit),
                    fmt(t.uncertainty, 3), t.truncated ? "yes" : "no"});
  return r;
}

Report analyze_correction(const Options& o, const Inputs& in) {
  const DD z = eval_point(o, in.lattice);
  IndexedSequence s;
  for (const auto& g : in.gfs) {
    if (g.width() < 1) continue;
    s.T.push_back(g.width());
    s.values.push_back(combo(g, z));
  }
  const DD limit = o.limit.empty() ? bulirsch_stoer(s, o.w).limit : parse_decimal(o.limit);
  const CorrectionFit fit = fit_correction(s, limit, o.exponent, o.fit_last);
  IndexedSequence gap;
  for (std::size_t i = 0; i < s.T.size(); ++i) {
    const DD d = limit - s.values[i];
    if (d.hi > 0.0) {
      gap.T.push_back(s.T[i]);
      gap.values.push_back(d);
    }
  }
  Report r;
  r.columns = {"T", "combo(zc)", "limit-combo", "local_exponent"};
  const IndexedSequence slopes = gap.values.size() >= 2 ? local_gradient(gap) : IndexedSequence{};
  for (std::size_t i = 0; i < s.T.size(); ++i) {
    std::string slope;
    for (std::size_t k = 0; k < slopes.T.size(); ++k) {
      if (slopes.T[k] == s.T[i]) slope = fmt(-slopes.values[k], 8);
    }
    r.rows.push_back({fmt_double(s.T[i]), fmt(s.values[i]), fmt(limit - s.values[i], 8), slope});
  }
  r.rows.push_back({"fit", fmt(fit.limit), fmt(fit.c1, 8), fmt_double(fit.exponent)});
  return r;
}

int cmd_analyze(const Options& o, const std::vector<std::string>& argv, std::ostream& out) {
  Options opt = o;
  std::vector<std::string> files = o.positional;
  if (o.report == "combo-scan" && files.size() >= 3 && opt.z_min.empty()) {
    opt.z_min = files[0];
    opt.z_max = files[1];
    try {
      opt.points = std::stoi(files[2]);
    } catch (const std::logic_error&) {
      throw SpecError("combo-scan: n_points must be an integer");
    }
    files.erase(files.begin(), files.begin() + 3);
  }
  Report r;
  if (o.report == "extrapolate") {
    r = analyze_extrapolate(opt);
  } else {
    const Inputs in = load_inputs(opt, files);
    if (o.report == "table-AB") {
      r = analyze_table(opt, in);
    } else if (o.report == "zc-intersect") {
      r = analyze_intersect(opt, in);
    } else if (o.report == "zc-lambda") {
      r = analyze_lambda(opt, in);
    } else if (o.report == "fit-cab") {
      r = analyze_fit(opt, in);
    } else if (o.report == "gradB") {
      r = analyze_gradB(opt, in);
    } else if (o.report == "combo-scan") {
      r = analyze_scan(opt, in);
    } else if (o.report == "correction") {
      r = analyze_correction(opt, in);
    } else {
      throw SpecError("unknown report '" + o.report + "'");
    }
  }
  r.config = config_json(opt, argv);
  emit(opt, r, out);
  return ok;
}

// ---- oracle ----------------------------------------------------------------

int cmd_oracle(const Options& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  StripSpec s;
  s.lattice = parse_lattice(o.lattice);
  s.max_degree = o.max_degree;
  s.half_length = o.half_length < 0 ? o.max_degree : o.half_length;
  s.precision = PrecisionMode::exact;
  s.width_bound = o.width_bound;
  const std::vector<int> widths = parse_widths(o.widths);
  bool agree = true;
  Report r;
  r.columns = {"T", "n", "A_enumerate", "A_dfs", "B_enumerate", "B_dfs", "A_closed_form", "B_closed_form"};
  for (const int T : widths) {
    s.width = T;
    const GFRecord rec = enumerate(s);
    const DfsCounts dfs = dfs_count(s, s.max_degree);
    const auto a = integer_coefficients(rec.A);
    const auto b = integer_coefficients(rec.B);
    const bool closed = s.lattice == LatticeKind::honeycomb && T <= 2;
    std::vector<mpz_class> ea, eb;
    if (closed) {
      ea = honeycomb_exact_coeffs(T, WalkClass::A, s.max_degree);
      eb = honeycomb_exact_coeffs(T, WalkClass::B, s.max_degree);
    }
    for (int n = 0; n <= s.max_degree; ++n) {
      const auto i = static_cast<std::size_t>(n);
      r.rows.push_back({std::to_string(T), std::to_string(n), a[i].get_str(), dfs.A[i].get_str(), b[i].get_str(),
                        dfs.B[i].get_str(), closed ? ea[i].get_str() : "", closed ? eb[i].get_str() : ""});
    }
    const bool ok_T = a == dfs.A && b == dfs.B && (!closed || (a == ea && b == eb));
    err << to_string(s.lattice) << " T=" << T << ": " << (ok_T ? "agree" : "MISMATCH") << "\n";
    agree = agree && ok_T;
  }
  r.config = config_json(o, argv);
  emit(o, r, out);
  return agree ? ok : check_failed;
}

// ---- rerun -----------------------------------------------------------------

int cmd_rerun(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 1) throw SpecError("rerun takes exactly one report file");
  const std::string original = read_text(o.positional[0]);
  const Report rep = Report::parse_csv(original);
  if (!rep.config.contains("argv") || !rep.config["argv"].is_array()) {
    throw InputError("report config carries no command line");
  }
  const auto argv = replayable(rep.config["argv"].get<std::vector<std::string>>());
  std::ostringstream fresh;
  const int code = run(argv, fresh, err);
  if (code != ok) return code;
  if (o.check) {
    const bool same = fresh.str() == original;
    err << (same ? "report reproduced\n" : "report differs from its rerun\n");
    if (!same) return check_failed;
  }
  if (o.output.empty()) {
    out << fresh.str();
  } else {
    write_text(o.output, fresh.str());
  }
  return ok;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CapacityError*>(&e)) return capacity_error;
  if (dynamic_cast<const SpecError*>(&e) || dynamic_cast<const InputError*>(&e) ||
      dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const DegreeMismatchError*>(&e)) {
    return config_error;
  }
  if (dynamic_cast<const SolverError*>(&e) || dynamic_cast<const BracketError*>(&e) ||
      dynamic_cast<const DomainError*>(&e)) {
    return solver_error;
  }
  return check_failed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Self-avoiding walk strip generating functions: enumeration and analysis", "sawstrip"};
  app.require_subcommand(1);

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "honeycomb | square | triangular")->capture_default_str();
    sub->add_option("--width,--widths", o.widths, "width T, range a-b or list a,b,c");
    sub->add_option("--max-degree,-M", o.max_degree, "truncation degree M")->capture_default_str();
    sub->add_option("--half-length,-L", o.half_length, "half-length L (default M)");
    sub->add_option("--width-bound", o.width_bound, "override the feasibility bound on T");
  };

  CLI::App* en = app.add_subcommand("enumerate", "enumerate A_T and B_T, one JSON record per width");
  add_spec(en);
  en->add_option("--precision", o.precision, "fast | high | exact")->capture_default_str();
  en->add_option("--workers", o.workers, "threads (A and B sweeps run concurrently)")->capture_default_str();
  en->add_option("--output-dir", o.output_dir, "directory for records (default $SAWSTRIP_OUTPUT_DIR or .)");

  CLI::App* an = app.add_subcommand("analyze", "reports from GF records");
  an->add_option("report", o.report,
                 "table-AB | zc-intersect | zc-lambda | fit-cab | gradB | combo-scan | extrapolate | correction")
      ->required();
  an->add_option("inputs", o.positional, "GF record files (combo-scan: z_min z_max n_points first)");
  an->add_option("--output,-o", o.output, "CSV destination (default stdout)");
  an->add_option("--zc,--z", o.z, "evaluation point (default: reference z_c of the lattice)");
  an->add_option("--lambda", o.lambda, "combination weight (default cos(3pi/8))");
  an->add_option("--closed-form", o.closed_form, "use the honeycomb closed forms for these widths");
  an->add_flag("--compare-paper", o.compare_paper, "add reference columns from the shipped tables");
  an->add_option("--z-min", o.z_min);
  an->add_option("--z-max", o.z_max);
  an->add_option("--points", o.points);
  an->add_option("--method", o.method, "bs | wynn | levin | neville | theta | barber")->capture_default_str();
  an->add_option("--w", o.w, "Bulirsch-Stoer exponent")->capture_default_str();
  an->add_option("--values", o.values, "comma-separated sequence to extrapolate");
  an->add_option("--first-T", o.first_T, "index of the first --values entry")->capture_default_str();
  an->add_option("--from-report", o.from_report, "CSV report to take a column from");
  an->add_option("--column", o.column, "column of --from-report");
  an->add_option("--plot-exponent", o.plot_exponent, "gradB abscissa exponent p in T^-p")->capture_default_str();
  an->add_option("--fit-last", o.fit_last, "use only the last n points in fits");
  an->add_option("--limit", o.limit, "correction: fixed limit (default: extrapolated)");
  an->add_option("--exponent", o.exponent, "correction exponent")->capture_default_str();
  an->add_option("--bracket-lo", o.bracket_lo);
  an->add_option("--bracket-hi", o.bracket_hi);

  CLI::App* orc = app.add_subcommand("oracle", "cross-check enumeration against brute force and closed forms");
  add_spec(orc);
  orc->add_option("--output,-o", o.output, "CSV destination (default stdout)");

  CLI::App* re = app.add_subcommand("rerun", "re-execute a report from its embedded configuration");
  re->add_option("report", o.positional, "report CSV")->required();
  re->add_option("--output,-o", o.output, "destination (default stdout)");
  re->add_flag("--check", o.check, "exit 1 unless the rerun reproduces the report byte for byte");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : config_error;
  }

  try {
    if (*en) {
      o.command = "enumerate";
      return cmd_enumerate(o, out);
    }
    if (*an) {
      o.command = "analyze";
      return cmd_analyze(o, args, out);
    }
    if (*orc) {
      o.command = "oracle";
      return cmd_oracle(o, args, out, err);
    }
    o.command = "rerun";
    return cmd_rerun(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace sawstrip::cli
