#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rbsep/graph.hpp"

namespace rbsep::cli {

enum ExitCode : int { kOk = 0, kInfeasible = 1, kInputError = 2, kCapExceeded = 3 };

inline constexpr std::size_t kDefaultSepCap = 64;

enum class SolveMethod { Exact, Greedy, TriangleFree, BoundedDegree, Xp, Auto };

[[nodiscard]] const char* to_string(SolveMethod m);
/// Throws Error(InvalidArgument) on unknown names.
[[nodiscard]] SolveMethod parse_solve_method(const std::string& name);

/// nullopt when `m` may run on a graph with this profile, else the name of
/// the profile flag that rules it out.
[[nodiscard]] std::optional<std::string> method_precondition(SolveMethod m, const GraphProfile& p);

/// Exact within the cap, otherwise the strongest constructive method whose
/// preconditions hold, falling back to greedy.
[[nodiscard]] SolveMethod auto_method(const GraphProfile& p, std::size_t sep_cap);

enum class Suite { Ratio, Families, Fuzz };

struct ExperimentOptions {
  Suite suite = Suite::Fuzz;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;  // empty: suite default
  std::size_t per_size = 8;
  std::size_t maxsep_cap = 14;
};

[[nodiscard]] Suite parse_suite(const std::string& name);

/// CSV with a header row; rows in instance order, no timing columns.
[[nodiscard]] std::string run_experiment(const ExperimentOptions& opts);

/// Entry point behind the `rbsep` executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbsep::cli
