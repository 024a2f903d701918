#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "hyperlc/errors.hpp"
#include "hyperlc/parse.hpp"
#include "json_report.hpp"
#include "portrait.hpp"

namespace hyperlc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string P, Q, f, g;
  int m = 0;
  int n = 0;
  std::string s_cap;
  std::uint64_t seed = 1;
  std::uint64_t suite_seed = SuiteOptions{}.seed;
  std::string out_path;
  bool from_stdin = false;
  bool boundary = false;
  std::string pattern_path;
  std::string poly;
  std::string window;
  double step = 1e-3;
  int steps = 20000;
  std::vector<std::string> trajectories;
  bool parallel = false;
};

Json read_json(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return Json::parse(text);
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return read_json(file);
}

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

HyperellipticCurve curve_input(const Job& job, const std::optional<Json>& doc) {
  if (doc) {
    if (auto c = curve_from_json(*doc)) return *c;
    throw UsageError("stdin JSON has no curve (P and Q)");
  }
  if (job.P.empty() || job.Q.empty()) throw UsageError("--P and --Q are required");
  return {parse_poly(job.P), parse_poly(job.Q)};
}

LienardSystem system_input(const Job& job, const std::optional<Json>& doc) {
  if (doc) {
    if (auto s = system_from_json(*doc)) return *s;
    throw UsageError("stdin JSON has no system (f and g)");
  }
  if (job.f.empty() || job.g.empty()) throw UsageError("--f and --g are required");
  return {parse_poly(job.f), parse_poly(job.g)};
}

SearchOptions search_options(const Job& job) {
  SearchOptions opts;
  if (!job.s_cap.empty()) {
    try {
      opts.s_cap = Integer(job.s_cap);
    } catch (const std::invalid_argument&) {
      throw UsageError("--s-cap must be an integer");
    }
    if (opts.s_cap <= 0) throw UsageError("--s-cap must be positive");
  }
  opts.seed = job.seed;
  return opts;
}

CaseIPattern pattern_from_json(const Json& j) {
  CaseIPattern p;
  auto rational = [](const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("pattern values must be integers or \"p/q\" strings");
  };
  if (j.contains("x0")) p.x0 = rational(j.at("x0"));
  if (j.contains("nodes")) {
    for (const auto& v : j.at("nodes")) p.nodes.push_back(rational(v));
  }
  if (j.contains("shift")) p.shift = rational(j.at("shift"));
  return p;
}

std::pair<double, double> point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected x,y but got '" + text + "'");
  return {to_double(parse_rational(text.substr(0, comma))), to_double(parse_rational(text.substr(comma + 1)))};
}

Window window_from(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(to_double(parse_rational(item)));
  if (v.size() != 4) throw UsageError("--window takes x_min,x_max,y_min,y_max");
  return {v[0], v[1], v[2], v[3]};
}

Json cmd_certify(const Job& job, const std::optional<Json>& doc) {
  const auto curve = curve_input(job, doc);
  const auto report = certify(curve);
  Json out = header("certify");
  out["curve"] = curve_json(curve);
  out["system"] = system_json(derive_system(curve));
  merge(out, report_json(report));
  if (doc) {
    if (auto sys = system_from_json(*doc)) out["input_system_matches"] = *sys == derive_system(curve);
    if (doc->contains("certified_count")) {
      out["input_certified_count_matches"] = doc->at("certified_count") == report.certified_count;
    }
  }
  return out;
}

Json cmd_reconstruct(const Job& job, const std::optional<Json>& doc) {
  const auto sys = system_input(job, doc);
  RecoverOptions opts;
  opts.allow_boundary_type = job.boundary;
  const auto outcome = recover_curve(sys, opts);
  Json out = header("reconstruct");
  merge(out, recovery_json(sys, outcome));
  if (doc) {
    if (auto c = curve_from_json(*doc)) out["input_curve_matches"] = outcome.curve && *outcome.curve == *c;
  }
  return out;
}

Json cmd_construct(const Job& job) {
  const auto opts = search_options(job);
  ConstructionResult r;
  if (!job.pattern_path.empty()) {
    r = construct_case_i(job.m, job.n, pattern_from_json(read_json_file(job.pattern_path)), opts);
  } else {
    r = construct(job.m, job.n, opts);
  }
  Json out = header("construct");
  merge(out, construction_json(r));
  return out;
}

Json cmd_roots(const Job& job) {
  Json out = header("roots");
  merge(out, roots_json(parse_poly(job.poly)));
  return out;
}

Json cmd_bounds(const Job& job) {
  Json out = header("bounds");
  merge(out, bounds_json(job.m, job.n, bounds(job.m, job.n)));
  return out;
}

// The SVG goes to --out when given (with a JSON summary on stdout), otherwise
// straight to stdout.
int cmd_portrait(const Job& job, const std::optional<Json>& doc, std::ostream& out) {
  PortraitSpec spec;
  spec.step = job.step;
  spec.steps = job.steps;
  if (!job.window.empty()) spec.window = window_from(job.window);
  for (const auto& t : job.trajectories) spec.seeds.push_back(point(t));
  const bool have_curve = doc ? curve_from_json(*doc).has_value() : (!job.P.empty() && !job.Q.empty());
  if (have_curve) spec.curve = curve_input(job, doc);
  const bool have_system = doc ? system_from_json(*doc).has_value() : (!job.f.empty() && !job.g.empty());
  if (have_system) {
    spec.system = system_input(job, doc);
  } else if (spec.curve) {
    spec.system = derive_system(*spec.curve);
  } else {
    throw UsageError("portrait needs a system (--f/--g) or a curve (--P/--Q)");
  }
  const auto portrait = render_portrait(spec);
  if (job.out_path.empty()) {
    out << portrait.svg;
    return kExitOk;
  }
  std::ofstream file(job.out_path);
  if (!file) throw UsageError("cannot write " + job.out_path);
  file << portrait.svg;
  Json summary = header("portrait");
  summary["out"] = job.out_path;
  summary["branches"] = portrait.branches;
  summary["trajectories"] = portrait.trajectories;
  summary["window"] = {portrait.window.x_min, portrait.window.x_max, portrait.window.y_min, portrait.window.y_max};
  out << summary.dump(2) << "\n";
  return kExitOk;
}

std::pair<Json, bool> cmd_suite(const Job& job) {
  SuiteOptions opts;
  opts.seed = job.suite_seed;
  opts.parallel = job.parallel;
  const auto results = run_acceptance(opts);
  Json out = header("suite");
  out["seed"] = job.suite_seed;
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  out["criteria"] = std::move(list);
  out["passed"] = all;
  return {out, all};
}

void emit(const Job& job, const Json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (job.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(job.out_path);
  if (!file) throw UsageError("cannot write " + job.out_path);
  file << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperelliptic limit cycles of polynomial Lienard systems", "hyperlc"};
  app.require_subcommand(1);
  Job job;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", job.out_path, "Write the result to a file"); };
  auto add_stdin = [&](CLI::App* sub) {
    sub->add_flag("--stdin", job.from_stdin, "Read a prior JSON document from standard input");
  };
  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--P", job.P, "P(x)");
    sub->add_option("--Q", job.Q, "Q(x)");
  };
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--f", job.f, "f(x)");
    sub->add_option("--g", job.g, "g(x)");
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--m", job.m, "deg f")->required();
    sub->add_option("--n", job.n, "deg g")->required();
  };

  auto* certify_cmd = app.add_subcommand("certify", "Certify the limit cycles carried by (y+P)^2 = Q");
  add_curve(certify_cmd);
  add_stdin(certify_cmd);
  add_out(certify_cmd);

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover the hyperelliptic curve of a system");
  add_system(reconstruct_cmd);
  add_stdin(reconstruct_cmd);
  add_out(reconstruct_cmd);
  reconstruct_cmd->add_flag("--boundary", job.boundary, "Also try type (m, 2m+1)");

  auto* construct_cmd = app.add_subcommand("construct", "Build a curve of type (m, n) with certified cycles");
  add_type(construct_cmd);
  construct_cmd->add_option("--pattern", job.pattern_path, "JSON node pattern for case (i)");
  construct_cmd->add_option("--s-cap", job.s_cap, "Largest s tried by the doubling searches");
  construct_cmd->add_option("--seed", job.seed, "Seed for jitter and node draws");
  add_out(construct_cmd);

  auto* roots_cmd = app.add_subcommand("roots", "Discrimination report of a polynomial");
  roots_cmd->add_option("poly", job.poly, "Polynomial")->required();
  add_out(roots_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Known bounds on the number of hyperelliptic limit cycles");
  add_type(bounds_cmd);
  add_out(bounds_cmd);

  auto* portrait_cmd = app.add_subcommand("portrait", "SVG phase portrait");
  add_curve(portrait_cmd);
  add_system(portrait_cmd);
  add_stdin(portrait_cmd);
  add_out(portrait_cmd);
  portrait_cmd->add_option("--window", job.window, "x_min,x_max,y_min,y_max");
  portrait_cmd->add_option("--step", job.step, "RK4 step")->check(CLI::PositiveNumber);
  portrait_cmd->add_option("--steps", job.steps, "Steps per trajectory")->check(CLI::NonNegativeNumber);
  portrait_cmd->add_option("--from", job.trajectories, "Trajectory start x,y (repeatable)");

  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance criteria");
  suite_cmd->add_option("--seed", job.suite_seed, "Seed for the randomized criteria");
  suite_cmd->add_flag("--parallel", job.parallel, "Run independent criteria on worker threads");
  add_out(suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::optional<Json> doc;
    if (job.from_stdin) doc = read_json(in);
    if (command == "portrait") return cmd_portrait(job, doc, out);
    if (command == "suite") {
      const auto [result, passed] = cmd_suite(job);
      emit(job, result, out);
      return passed ? kExitOk : kExitSuiteFailed;
    }
    Json result;
    if (command == "certify") result = cmd_certify(job, doc);
    if (command == "reconstruct") result = cmd_reconstruct(job, doc);
    if (command == "construct") result = cmd_construct(job);
    if (command == "roots") result = cmd_roots(job);
    if (command == "bounds") result = cmd_bounds(job);
    emit(job, result, out);
    return kExitOk;
  } catch (const DomainError& e) {
    Json result = header(command);
    result["error"] = Json{{"code", e.code()}, {"message", e.what()}};
    out << result.dump(2) << "\n";
    err << "hyperlc " << command << ": " << e.code() << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "hyperlc " << command << ": parse error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "hyperlc " << command << ": bad JSON: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "hyperlc " << command << ": " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace hyperlc::cli
