#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "rbsep/approx.hpp"
#include "rbsep/cli.hpp"
#include "rbsep/exact.hpp"
#include "rbsep/generators.hpp"

namespace rbsep::cli {

Suite parse_suite(const std::string& name) {
  if (name == "ratio") return Suite::Ratio;
  if (name == "families") return Suite::Families;
  if (name == "fuzz") return Suite::Fuzz;
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

namespace {

constexpr const char* kNA = "NA";

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t floor_log2(std::size_t n) { return n == 0 ? 0 : std::bit_width(n) - 1; }
std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : width_(header.size()) { row(header); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < width_; ++i) {
      if (i) out_ << ',';
      out_ << (i < cells.size() ? cells[i] : kNA);
    }
    out_ << '\n';
  }

  [[nodiscard]] std::string str() const { return out_.str(); }

 private:
  std::size_t width_;
  std::ostringstream out_;
};

std::string error_status(const Error& e) { return std::string("error:") + to_string(e.kind()); }

std::string random_spec(std::size_t n, std::uint64_t seed) {
  return "random:n=" + std::to_string(n) + ";p=0.5;seed=" + std::to_string(seed);
}

std::vector<std::size_t> sizes_or(const ExperimentOptions& o, std::vector<std::size_t> fallback) {
  return o.sizes.empty() ? fallback : o.sizes;
}

// --- families ---------------------------------------------------------------

struct FamilyRow {
  std::string spec;
  std::optional<std::size_t> expected_sep;
  std::optional<std::size_t> expected_maxsep;
  std::optional<std::size_t> expected_coloring;
};

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : kNA; }

std::string families(const ExperimentOptions& o) {
  std::vector<FamilyRow> rows{{"path:n=6", 3, 3, {}}};
  // Specs here must stay comma-free; multi-parameter specs use ';'.
  for (std::size_t k = 1; k <= 3; ++k)
    rows.push_back({"half-complement:k=" + std::to_string(k), k == 2 ? std::optional<std::size_t>(3) : std::nullopt,
                    2 * k - 1, 2 * k - 1});
  for (std::size_t k = 1; k <= 3; ++k) rows.push_back({"power-set:k=" + std::to_string(k), {}, k, k});
  rows.push_back({"multipartite:parts=5/5", 8, 4, 4});
  rows.push_back({"multipartite:parts=5/5/5", 12, 6, 6});
  for (std::size_t k = 1; k <= 2; ++k) rows.push_back({"spider:k=" + std::to_string(k), {}, 3 * k, 3 * k});

  Csv csv({"spec", "n", "m", "twin_free", "sep", "expected_sep", "maxsep", "expected_maxsep",
           "coloring_sep_rb", "expected_coloring_sep_rb", "status"});
  for (const auto& fr : rows) {
    std::vector<std::string> cells{fr.spec};
    try {
      const Generated gen = generate(GeneratorSpec::parse(fr.spec));
      const Graph& g = gen.graph;
      const bool twin_free = twin_classes(g).twin_free();
      std::optional<std::size_t> sep, maxsep, col;
      sep = (twin_free ? sep_exact(g) : sep_exact_allow_twins(g))->optimum;
      if (twin_free && g.order() <= o.maxsep_cap) maxsep = maxsep_exact(g, o.maxsep_cap).value;
      if (gen.coloring) col = sep_rb_exact(g, *gen.coloring)->optimum;
      bool ok = true;
      auto agree = [&](const std::optional<std::size_t>& got, const std::optional<std::size_t>& want) {
        if (got && want && *got != *want) ok = false;
      };
      agree(sep, fr.expected_sep);
      agree(maxsep, fr.expected_maxsep);
      agree(col, fr.expected_coloring);
      cells.insert(cells.end(),
                   {std::to_string(g.order()), std::to_string(g.edge_count()), yes_no(twin_free), opt(sep),
                    opt(fr.expected_sep), maxsep ? std::to_string(*maxsep) : "skipped",
                    opt(fr.expected_maxsep), opt(col), opt(fr.expected_coloring), ok ? "ok" : "mismatch"});
    } catch (const Error& e) {
      cells.resize(11, kNA);
      cells.back() = error_status(e);
    }
    csv.row(cells);
  }
  return csv.str();
}

// --- fuzz -------------------------------------------------------------------

std::string fuzz(const ExperimentOptions& o) {
  std::mt19937_64 seeds(o.seed);
  Csv csv({"spec", "coloring_seed", "n", "m", "red", "blue", "sep_rb", "greedy", "ratio", "guarantee",
           "within_guarantee", "status"});
  for (std::size_t n : sizes_or(o, {5, 6, 7, 8})) {
    for (std::size_t i = 0; i < o.per_size; ++i) {
      const std::uint64_t graph_seed = seeds() >> 16;
      const std::uint64_t coloring_seed = seeds() >> 16;
      const std::string spec = random_spec(n, graph_seed);
      std::vector<std::string> cells{spec, std::to_string(coloring_seed)};
      try {
        const Graph g = generate(GeneratorSpec::parse(spec)).graph;
        const Coloring c = random_coloring(n, coloring_seed);
        const std::size_t exact = sep_rb_exact(g, c)->optimum;
        const ApproxReport greedy = sep_rb_greedy(g, c);
        const std::size_t gsize = greedy.solution.size();
        const double ratio = exact == 0 ? 1.0 : static_cast<double>(gsize) / static_cast<double>(exact);
        const bool within = static_cast<double>(gsize) <= greedy.guarantee * static_cast<double>(exact) + 1e-9;
        cells.insert(cells.end(),
                     {std::to_string(n), std::to_string(g.edge_count()), std::to_string(c.count(Color::Red)),
                      std::to_string(c.count(Color::Blue)), std::to_string(exact), std::to_string(gsize),
                      fixed(ratio), fixed(greedy.guarantee), yes_no(within), within ? "ok" : "violation"});
      } catch (const Error& e) {
        cells.resize(12, kNA);
        cells.back() = error_status(e);
      }
      csv.row(cells);
    }
  }
  return csv.str();
}

// --- ratio ------------------------------------------------------------------

std::string ratio(const ExperimentOptions& o) {
  std::mt19937_64 seeds(o.seed);
  Csv csv({"spec", "n", "m", "delta", "gamma", "sep", "maxsep", "greedy_all_pairs", "lb", "lb_holds",
           "ratio_log_rhs", "ratio_log_holds", "ratio_delta_rhs", "ratio_delta_holds", "status"});
  for (std::size_t n : sizes_or(o, {4, 5, 6, 7})) {
    for (std::size_t i = 0; i < o.per_size; ++i) {
      const std::string spec = random_spec(n, seeds() >> 16);
      std::vector<std::string> cells{spec};
      try {
        const Graph g = generate(GeneratorSpec::parse(spec)).graph;
        const GraphProfile p = graph_profile(g);
        const std::size_t gamma = gamma_exact(g).optimum;
        const std::size_t sep = sep_exact(g)->optimum;
        const std::size_t greedy = sep_all_pairs_greedy(g).solution.size();
        cells.insert(cells.end(), {std::to_string(n), std::to_string(p.m), std::to_string(p.max_degree),
                                   std::to_string(gamma), std::to_string(sep)});
        if (n > o.maxsep_cap) {
          cells.insert(cells.end(), {"skipped", std::to_string(greedy)});
          cells.resize(14, "skipped");
          cells.push_back("skipped");
        } else {
          const std::size_t maxsep = maxsep_exact(g, o.maxsep_cap).value;
          const bool excluded = n == 8 || n == 9 || n == 16 || n == 17;
          const std::size_t lb = floor_log2(n);
          const std::size_t rhs_log = ceil_log2(n) * maxsep;
          const std::size_t rhs_delta = ceil_log2(p.max_degree + 1) * maxsep + gamma;
          const bool lb_ok = excluded || maxsep >= lb;
          const bool ok = lb_ok && sep <= rhs_log && sep <= rhs_delta;
          cells.insert(cells.end(),
                       {std::to_string(maxsep), std::to_string(greedy), std::to_string(lb),
                        excluded ? "skipped" : yes_no(maxsep >= lb), std::to_string(rhs_log),
                        yes_no(sep <= rhs_log), std::to_string(rhs_delta), yes_no(sep <= rhs_delta),
                        ok ? "ok" : "violation"});
        }
      } catch (const Error& e) {
        cells.resize(15, kNA);
        cells.back() = error_status(e);
      }
      csv.row(cells);
    }
  }
  return csv.str();
}

}  // namespace

std::string run_experiment(const ExperimentOptions& opts) {
  switch (opts.suite) {
    case Suite::Families: return families(opts);
    case Suite::Fuzz: return fuzz(opts);
    case Suite::Ratio: return ratio(opts);
  }
  return {};
}

}  // namespace rbsep::cli
