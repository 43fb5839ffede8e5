#include "rbsep/cli.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rbsep/approx.hpp"
#include "rbsep/exact.hpp"
#include "rbsep/generators.hpp"
#include "rbsep/io.hpp"
#include "rbsep/report.hpp"
#include "rbsep/trees.hpp"

namespace rbsep::cli {

using nlohmann::ordered_json;

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Exact: return "exact";
    case SolveMethod::Greedy: return "greedy";
    case SolveMethod::TriangleFree: return "triangle-free";
    case SolveMethod::BoundedDegree: return "bounded-degree";
    case SolveMethod::Xp: return "xp";
    case SolveMethod::Auto: return "auto";
  }
  return "?";
}

SolveMethod parse_solve_method(const std::string& name) {
  for (SolveMethod m : {SolveMethod::Exact, SolveMethod::Greedy, SolveMethod::TriangleFree,
                        SolveMethod::BoundedDegree, SolveMethod::Xp, SolveMethod::Auto})
    if (name == to_string(m)) return m;
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + name + "'");
}

std::optional<std::string> method_precondition(SolveMethod m, const GraphProfile& p) {
  switch (m) {
    case SolveMethod::Exact:
    case SolveMethod::Greedy:
    case SolveMethod::Auto:
      return std::nullopt;
    case SolveMethod::TriangleFree:
      if (!p.twin_free) return "twin_free";
      if (!p.triangle_free) return "triangle_free";
      return std::nullopt;
    case SolveMethod::BoundedDegree:
      if (!p.twin_free) return "twin_free";
      if (p.max_degree <= 2 && !p.triangle_free) return "triangle_free";
      return std::nullopt;
    case SolveMethod::Xp:
      if (!p.twin_free) return "twin_free";
      if (p.max_degree <= 2 && !p.triangle_free) return "triangle_free";
      return std::nullopt;
  }
  return std::nullopt;
}

SolveMethod auto_method(const GraphProfile& p, std::size_t sep_cap) {
  if (p.n <= sep_cap) return SolveMethod::Exact;
  for (SolveMethod m : {SolveMethod::TriangleFree, SolveMethod::BoundedDegree})
    if (!method_precondition(m, p)) return m;
  return SolveMethod::Greedy;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
  std::ostream& out;
  std::ostream& err;
  RunReport report;
  Clock::time_point start = Clock::now();
  std::string json_path;

  int finish(int code) {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    out << to_text(report);
    if (!json_path.empty()) io::save(json_path, to_json(report).dump(2) + "\n");
    return code;
  }

  Graph load_graph(const std::string& path) {
    const std::string text = io::read_file(path);
    report.inputs.push_back({"graph", path, fnv1a_hex(text)});
    try {
      return io::graph_from_string(text);
    } catch (const ParseError& e) {
      throw ParseError(path, e);
    }
  }

  Coloring load_coloring(const std::string& path, std::size_t n) {
    const std::string text = io::read_file(path);
    report.inputs.push_back({"coloring", path, fnv1a_hex(text)});
    try {
      return io::coloring_from_string(text, n);
    } catch (const ParseError& e) {
      throw ParseError(path, e);
    }
  }

  VertexSet load_set(const std::string& path, std::size_t n) {
    const std::string text = io::read_file(path);
    report.inputs.push_back({"set", path, fnv1a_hex(text)});
    try {
      return io::vertex_set_from_string(text, n);
    } catch (const ParseError& e) {
      throw ParseError(path, e);
    }
  }

  void certify(WitnessKind kind, const VertexSet& s, std::optional<std::string> coloring = {}) {
    report.certificates.push_back({kind, s.to_vector(), std::move(coloring)});
  }
};

ordered_json profile_json(const GraphProfile& p) {
  return ordered_json{{"n", p.n},
                      {"m", p.m},
                      {"max_degree", p.max_degree},
                      {"min_degree", p.min_degree},
                      {"triangle_free", p.triangle_free},
                      {"connected", p.connected},
                      {"tree", p.tree},
                      {"twin_free", p.twin_free}};
}

std::size_t floor_log2(std::size_t n) { return n == 0 ? 0 : std::bit_width(n) - 1; }
std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string graph, coloring, method = "auto";
  std::optional<std::size_t> budget;
  std::size_t cap = kDefaultSepCap;
  std::uint64_t xp_budget = kDefaultXpBudget;
};

int cmd_solve(Context& ctx, const SolveArgs& a) {
  const Graph g = ctx.load_graph(a.graph);
  const Coloring c = ctx.load_coloring(a.coloring, g.order());
  const GraphProfile profile = graph_profile(g);
  SolveMethod method = parse_solve_method(a.method);
  if (method == SolveMethod::Auto) method = auto_method(profile, a.cap);
  auto& res = ctx.report.results;
  res["operation"] = "sep_rb";
  res["method"] = to_string(method);
  res["profile"] = profile_json(profile);
  res["red"] = c.count(Color::Red);
  res["blue"] = c.count(Color::Blue);

  if (auto flag = method_precondition(method, profile)) {
    ctx.err << "error: method " << to_string(method) << " requires " << *flag << "=true\n";
    res["status"] = "precondition-failed";
    res["failed_flag"] = *flag;
    return ctx.finish(kInputError);
  }
  try {
    switch (method) {
      case SolveMethod::Exact: {
        if (g.order() > a.cap) {
          res["status"] = "skipped";
          res["reason"] = "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(a.cap);
          ctx.err << "error: " << res["reason"].get<std::string>() << '\n';
          return ctx.finish(kCapExceeded);
        }
        auto r = sep_rb_exact(g, c, a.budget);
        if (!r) {
          res["status"] = "infeasible";
          res["budget"] = *a.budget;
          return ctx.finish(kInfeasible);
        }
        res["status"] = "optimal";
        res["solve"] = to_json(*r);
        ctx.certify(WitnessKind::RedBlue, r->witness);
        break;
      }
      case SolveMethod::Xp: {
        const SolveReport r = xp_exact_small_class(g, c, a.xp_budget);
        res["status"] = "optimal";
        res["size_bound"] = xp_size_bound(g, c);
        res["solve"] = to_json(r);
        ctx.certify(WitnessKind::RedBlue, r.witness);
        if (a.budget && r.optimum > *a.budget) {
          res["status"] = "infeasible";
          res["budget"] = *a.budget;
          return ctx.finish(kInfeasible);
        }
        break;
      }
      default: {
        const ApproxReport r = method == SolveMethod::Greedy         ? sep_rb_greedy(g, c)
                               : method == SolveMethod::TriangleFree ? triangle_free_construct(g, c)
                                                                     : bounded_degree_construct(g, c);
        res["status"] = "approximate";
        res["approx"] = to_json(r);
        ctx.certify(WitnessKind::RedBlue, r.solution);
        break;
      }
    }
  } catch (const UnseparableError& e) {
    res["status"] = "unseparable";
    res["twin_pair"] = {e.red(), e.blue()};
    ctx.err << "error: " << e.what() << '\n';
    return ctx.finish(kInfeasible);
  } catch (const BudgetExceededError& e) {
    res["status"] = "skipped";
    res["attempted_bound"] = e.attempted_bound();
    ctx.err << "error: " << e.what() << '\n';
    return ctx.finish(kCapExceeded);
  }
  const auto failure = reverify(ctx.report, g, c);
  res["verified"] = !failure.has_value();
  if (failure) ctx.err << "error: " << *failure << '\n';
  return ctx.finish(failure ? kInfeasible : kOk);
}

// --- maxsep -----------------------------------------------------------------

struct MaxsepArgs {
  std::string graph, mode = "exact";
  std::size_t cap = kDefaultMaxsepCap;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
};

void require_twin_free(const Graph& g) {
  TwinReport twins = twin_classes(g);
  if (!twins.twin_free()) throw NotTwinFreeError(std::move(twins));
}

int cmd_maxsep(Context& ctx, const MaxsepArgs& a) {
  const Graph g = ctx.load_graph(a.graph);
  auto& res = ctx.report.results;
  res["operation"] = "maxsep";
  res["mode"] = a.mode;
  res["n"] = g.order();
  require_twin_free(g);

  if (a.mode == "exact") {
    if (g.order() > a.cap) {
      res["status"] = "skipped";
      res["reason"] = "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(a.cap);
      ctx.err << "error: " << res["reason"].get<std::string>() << '\n';
      return ctx.finish(kCapExceeded);
    }
    const MaxSepReport r = maxsep_exact(g, a.cap);
    res["status"] = "exact";
    res["maxsep"] = to_json(r);
    ctx.certify(WitnessKind::RedBlue, r.witness, coloring_text(r.worst_coloring));
  } else if (a.mode == "approx") {
    const ApproxReport r = sep_all_pairs_greedy(g);
    const std::size_t n = g.order();
    const bool excluded = n == 8 || n == 9 || n == 16 || n == 17;
    res["status"] = "bounds";
    res["upper_bound"] = r.solution.size();
    res["lower_bound"] = excluded ? std::size_t{1} : floor_log2(n);
    res["lower_bound_source"] = excluded ? "trivial" : "floor(log2 n)";
    res["guarantee"] = r.guarantee;
    ctx.certify(WitnessKind::Separating, r.solution);
  } else {
    if (g.order() > kDefaultSepCap) {
      res["status"] = "skipped";
      res["reason"] = "order exceeds sep cap";
      return ctx.finish(kCapExceeded);
    }
    std::mt19937_64 rng(a.seed);
    std::size_t best = 0;
    Coloring worst = Coloring::monochromatic(g.order(), Color::Blue);
    VertexSet witness(g.order());
    for (std::size_t i = 0; i < a.samples; ++i) {
      const Coloring c = random_coloring(g.order(), rng());
      auto r = sep_rb_exact(g, c);
      if (r->optimum > best || i == 0) {
        best = r->optimum;
        worst = c;
        witness = r->witness;
      }
    }
    res["status"] = "lower-bound";
    res["lower_bound"] = best;
    res["samples"] = a.samples;
    res["seed"] = a.seed;
    res["worst_coloring"] = coloring_text(worst);
    ctx.certify(WitnessKind::RedBlue, witness, coloring_text(worst));
  }
  const auto failure = reverify(ctx.report, g, std::nullopt);
  res["verified"] = !failure.has_value();
  return ctx.finish(failure ? kInfeasible : kOk);
}

// --- bounds -----------------------------------------------------------------

struct BoundsArgs {
  std::string graph;
  std::size_t cap = kDefaultMaxsepCap;
  std::size_t sep_cap = kDefaultSepCap;
};

class CheckList {
 public:
  explicit CheckList(std::vector<BoundCheck>& out) : out_(out) {}

  // lhs <= rhs
  void at_most(std::string name, std::optional<double> lhs, std::optional<double> rhs,
               std::string skip_reason = {}) {
    BoundCheck b{std::move(name), lhs.value_or(0), rhs.value_or(0), CheckStatus::Skipped, {}};
    if (!skip_reason.empty()) {
      b.note = std::move(skip_reason);
    } else if (!lhs || !rhs) {
      b.note = "value not computed";
    } else {
      b.status = *lhs <= *rhs + 1e-9 ? CheckStatus::Holds : CheckStatus::Fails;
    }
    out_.push_back(std::move(b));
  }

 private:
  std::vector<BoundCheck>& out_;
};

int cmd_bounds(Context& ctx, const BoundsArgs& a) {
  const Graph g = ctx.load_graph(a.graph);
  const GraphProfile p = graph_profile(g);
  const std::size_t n = g.order();
  auto& res = ctx.report.results;
  res["operation"] = "bounds";
  res["profile"] = profile_json(p);

  std::optional<double> sep, maxsep, gamma;
  if (n <= a.sep_cap) {
    const auto s = p.twin_free ? sep_exact(g) : sep_exact_allow_twins(g);
    sep = static_cast<double>(s->optimum);
    res["sep"] = to_json(*s);
    res["sep_variant"] = p.twin_free ? "all-pairs" : "twins-allowed";
    if (p.twin_free) ctx.certify(WitnessKind::Separating, s->witness);
    const SolveReport d = gamma_exact(g);
    gamma = static_cast<double>(d.optimum);
    res["gamma"] = to_json(d);
    ctx.certify(WitnessKind::Dominating, d.witness);
  } else {
    res["sep"] = "skipped";
    res["gamma"] = "skipped";
  }
  std::string maxsep_skip;
  if (!p.twin_free) {
    maxsep_skip = "graph has twins";
    res["maxsep"] = "skipped";
  } else if (n > a.cap) {
    maxsep_skip = "order exceeds maxsep cap";
    res["maxsep"] = "skipped";
  } else {
    const MaxSepReport m = maxsep_exact(g, a.cap);
    maxsep = static_cast<double>(m.value);
    res["maxsep"] = to_json(m);
    ctx.certify(WitnessKind::RedBlue, m.witness, coloring_text(m.worst_coloring));
  }

  const double dn = static_cast<double>(n);
  CheckList checks(ctx.report.bound_checks);
  const bool lb_excluded = n == 8 || n == 9 || n == 16 || n == 17;
  checks.at_most("floor(log2 n) <= maxsep", static_cast<double>(floor_log2(n)), maxsep,
                 lb_excluded ? "excluded order" : maxsep_skip);
  checks.at_most("maxsep <= sep", maxsep, sep, maxsep_skip);
  checks.at_most("sep <= n - 1", sep, dn - 1, n < 2 ? "order below 2" : p.twin_free ? "" : "graph has twins");
  checks.at_most("sep <= ceil(log2 n) * maxsep", sep,
                 maxsep ? std::optional(static_cast<double>(ceil_log2(n)) * *maxsep) : std::nullopt,
                 maxsep_skip);
  checks.at_most("sep <= ceil(log2(delta + 1)) * maxsep + gamma", sep,
                 maxsep && gamma ? std::optional(static_cast<double>(ceil_log2(p.max_degree + 1)) * *maxsep + *gamma)
                                 : std::nullopt,
                 maxsep_skip);
  if (p.tree && n >= 5) {
    const TreeProfile tp = tree_profile(g);
    const double s = static_cast<double>(tp.s());
    res["tree"] = {{"leaves", tp.l()}, {"supports", tp.s()}, {"supports_plus", tp.s_plus()}};
    checks.at_most("maxsep <= (n + s) / 2", maxsep, (dn + s) / 2, maxsep_skip);
    checks.at_most("maxsep <= 2n / 3", maxsep, 2 * dn / 3, maxsep_skip);
    checks.at_most("sep <= n - s", sep, dn - s, p.twin_free ? "" : "graph has twins");
  }
  bool any_fail = false;
  for (const auto& b : ctx.report.bound_checks) any_fail = any_fail || b.status == CheckStatus::Fails;
  const auto failure = reverify(ctx.report, g, std::nullopt);
  res["verified"] = !failure.has_value();
  return ctx.finish(any_fail || failure ? kInfeasible : kOk);
}

// --- generate / reduce / verify ----------------------------------------------

int cmd_generate(Context& ctx, const std::string& spec_text, const std::string& prefix) {
  const GeneratorSpec spec = GeneratorSpec::parse(spec_text);
  const Generated gen = generate(spec);
  auto& res = ctx.report.results;
  res["operation"] = "generate";
  res["spec"] = gen.provenance;
  res["n"] = gen.graph.order();
  res["m"] = gen.graph.edge_count();
  io::save(prefix + ".graph", io::to_string(gen.graph));
  ordered_json files = ordered_json::array({prefix + ".graph"});
  if (gen.coloring) {
    io::save(prefix + ".coloring", io::to_string(*gen.coloring));
    files.push_back(prefix + ".coloring");
  }
  std::string provenance = gen.provenance + "\n";
  if (gen.k) {
    res["k"] = *gen.k;
    provenance += "k " + std::to_string(*gen.k) + "\n";
  }
  io::save(prefix + ".spec", provenance);
  files.push_back(prefix + ".spec");
  res["files"] = files;
  return ctx.finish(kOk);
}

int cmd_reduce(Context& ctx, const std::string& graph, const std::string& coloring,
               const std::string& out_path) {
  const Graph g = ctx.load_graph(graph);
  const Coloring c = ctx.load_coloring(coloring, g.order());
  try {
    const SetSystem sys = reduce_rb_to_set_cover(g, c);
    if (out_path.empty()) {
      ctx.out << to_string(sys);
      return kOk;
    }
    io::save(out_path, to_string(sys));
    auto& res = ctx.report.results;
    res["operation"] = "reduce";
    res["universe_size"] = sys.universe_size;
    res["sets"] = sys.sets.size();
    res["written"] = out_path;
    return ctx.finish(kOk);
  } catch (const UnseparableError& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
}

struct VerifyArgs {
  std::string graph, coloring, set, report, kind;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  const Graph g = ctx.load_graph(a.graph);
  std::optional<Coloring> c;
  if (!a.coloring.empty()) c = ctx.load_coloring(a.coloring, g.order());
  auto& res = ctx.report.results;
  res["operation"] = "verify";

  if (!a.report.empty()) {
    const std::string text = io::read_file(a.report);
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, a.report + ": " + e.what());
    }
    const RunReport loaded = run_report_from_json(j);
    for (const auto& in : loaded.inputs)
      if (in.role == "graph" && in.fnv1a != ctx.report.inputs.front().fnv1a)
        ctx.err << "warning: graph digest differs from the one recorded in the report\n";
    const auto failure = reverify(loaded, g, c);
    res["certificates"] = loaded.certificates.size();
    res["valid"] = !failure.has_value();
    if (failure) res["violation"] = *failure;
    return ctx.finish(failure ? kInfeasible : kOk);
  }

  if (a.set.empty()) throw Error(ErrorKind::InvalidArgument, "verify needs --set or --report");
  const VertexSet s = ctx.load_set(a.set, g.order());
  const WitnessKind kind = !a.kind.empty() ? witness_kind_from_string(a.kind)
                           : c            ? WitnessKind::RedBlue
                                          : WitnessKind::Separating;
  res["kind"] = to_string(kind);
  res["size"] = s.size();
  if (kind == WitnessKind::RedBlue && !c)
    throw Error(ErrorKind::InvalidArgument, "red-blue verification needs --coloring");
  ctx.certify(kind, s);
  const auto failure = reverify(ctx.report, g, c);
  res["valid"] = !failure.has_value();
  if (failure) res["violation"] = *failure;
  return ctx.finish(failure ? kInfeasible : kOk);
}

int cmd_experiment(Context& ctx, const ExperimentOptions& opts, const std::string& out_path) {
  const std::string csv = run_experiment(opts);
  if (out_path.empty()) {
    ctx.out << csv;
  } else {
    io::save(out_path, csv);
    ctx.out << "written: " << out_path << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Red-blue separation solvers and experiments", "rbsep"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Minimum red-blue separating set");
  solve->add_option("--graph", solve_args.graph, "Graph file")->required();
  solve->add_option("--coloring", solve_args.coloring, "Coloring file")->required();
  solve->add_option("--method", solve_args.method, "exact|greedy|triangle-free|bounded-degree|xp|auto")
      ->check(CLI::IsMember({"exact", "greedy", "triangle-free", "bounded-degree", "xp", "auto"}));
  solve->add_option("--budget", solve_args.budget, "Decision bound k: is sep_RB <= k?");
  solve->add_option("--cap", solve_args.cap, "Largest order for the exact solver");
  solve->add_option("--xp-budget", solve_args.xp_budget, "Subset budget for the xp method");
  solve->add_option("--out", solve_out, "Write the JSON report here");

  MaxsepArgs maxsep_args;
  std::string maxsep_out;
  auto* maxsep = app.add_subcommand("maxsep", "Worst-case coloring value");
  maxsep->add_option("--graph", maxsep_args.graph, "Graph file")->required();
  maxsep->add_option("--mode", maxsep_args.mode, "exact|approx|sample")
      ->check(CLI::IsMember({"exact", "approx", "sample"}));
  maxsep->add_option("--cap", maxsep_args.cap, "Largest order for exact mode");
  maxsep->add_option("--samples", maxsep_args.samples, "Colorings drawn in sample mode");
  maxsep->add_option("--seed", maxsep_args.seed, "Seed for sample mode");
  maxsep->add_option("--out", maxsep_out, "Write the JSON report here");

  BoundsArgs bounds_args;
  std::string bounds_out;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the known inequalities on one graph");
  bounds->add_option("--graph", bounds_args.graph, "Graph file")->required();
  bounds->add_option("--cap", bounds_args.cap, "Largest order for exact maxsep");
  bounds->add_option("--sep-cap", bounds_args.sep_cap, "Largest order for exact sep and gamma");
  bounds->add_option("--out", bounds_out, "Write the JSON report here");

  std::string gen_spec, gen_prefix;
  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->add_option("--spec", gen_spec, "family:param=value,...")->required();
  gen->add_option("--out", gen_prefix, "Output prefix for .graph/.coloring/.spec")->required();

  std::string red_graph, red_coloring, red_out;
  auto* reduce = app.add_subcommand("reduce", "Emit the set-cover instance");
  reduce->add_option("--graph", red_graph, "Graph file")->required();
  reduce->add_option("--coloring", red_coloring, "Coloring file")->required();
  reduce->add_option("--out", red_out, "Set system file (stdout when absent)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a set or a saved report");
  verify->add_option("--graph", verify_args.graph, "Graph file")->required();
  verify->add_option("--coloring", verify_args.coloring, "Coloring file");
  verify->add_option("--set", verify_args.set, "Vertex set file");
  verify->add_option("--report", verify_args.report, "JSON report to re-verify");
  verify->add_option("--kind", verify_args.kind, "red-blue|separating|dominating")
      ->check(CLI::IsMember({"red-blue", "separating", "dominating"}));

  ExperimentOptions exp_opts;
  std::string exp_suite = "fuzz", exp_out;
  auto* exp = app.add_subcommand("experiment", "Batch suite to CSV");
  exp->add_option("--suite", exp_suite, "ratio|families|fuzz")
      ->check(CLI::IsMember({"ratio", "families", "fuzz"}));
  exp->add_option("--seed", exp_opts.seed, "Base seed");
  exp->add_option("--sizes", exp_opts.sizes, "Orders to sample, comma separated")->delimiter(',');
  exp->add_option("--count", exp_opts.per_size, "Instances per order");
  exp->add_option("--cap", exp_opts.maxsep_cap, "Largest order for exact maxsep");
  exp->add_option("--out", exp_out, "CSV file (stdout when absent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Context ctx{out, err, {}, Clock::now(), {}};
  ctx.report.command.push_back("rbsep");
  ctx.report.command.insert(ctx.report.command.end(), args.begin(), args.end());
  try {
    if (*solve) {
      ctx.json_path = solve_out;
      return cmd_solve(ctx, solve_args);
    }
    if (*maxsep) {
      ctx.json_path = maxsep_out;
      return cmd_maxsep(ctx, maxsep_args);
    }
    if (*bounds) {
      ctx.json_path = bounds_out;
      return cmd_bounds(ctx, bounds_args);
    }
    if (*gen) return cmd_generate(ctx, gen_spec, gen_prefix);
    if (*reduce) return cmd_reduce(ctx, red_graph, red_coloring, red_out);
    if (*verify) return cmd_verify(ctx, verify_args);
    exp_opts.suite = parse_suite(exp_suite);
    return cmd_experiment(ctx, exp_opts, exp_out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotTwinFreeError& e) {
    err << "error: graph is not twin-free; twin classes:";
    for (const auto& cls : e.twins().classes)
      if (cls.size() > 1) {
        err << " {";
        for (std::size_t i = 0; i < cls.size(); ++i) err << (i ? " " : "") << cls[i];
        err << '}';
      }
    err << '\n';
    return kInputError;
  } catch (const UnseparableError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::CapExceeded || e.kind() == ErrorKind::BudgetExceeded ? kCapExceeded
                                                                                        : kInputError;
  }
}

}  // namespace rbsep::cli
