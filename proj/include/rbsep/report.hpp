#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rbsep/approx.hpp"
#include "rbsep/exact.hpp"
#include "rbsep/graph.hpp"

namespace rbsep {

inline constexpr int kReportVersion = 1;

/// One character per vertex, no line terminator.
[[nodiscard]] std::string coloring_text(const Coloring& c);

/// 64-bit FNV-1a, lowercase hex.
[[nodiscard]] std::string fnv1a_hex(std::string_view bytes);

enum class CheckStatus { Holds, Fails, Skipped };
[[nodiscard]] const char* to_string(CheckStatus s);

struct BoundCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  CheckStatus status = CheckStatus::Skipped;
  std::string note;  // reason when skipped
};

/// What a certificate in a report claims to be.
enum class WitnessKind { RedBlue, Separating, Dominating };
[[nodiscard]] const char* to_string(WitnessKind k);
[[nodiscard]] WitnessKind witness_kind_from_string(const std::string& s);

struct Certificate {
  WitnessKind kind = WitnessKind::RedBlue;
  std::vector<Vertex> vertices;
  /// Coloring the certificate refers to, when it is not the input coloring.
  std::optional<std::string> coloring;
};

struct InputDigest {
  std::string role;  // graph, coloring, set, spec
  std::string path;
  std::string fnv1a;
};

struct RunReport {
  std::vector<std::string> command;
  std::vector<InputDigest> inputs;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Certificate> certificates;
  std::vector<BoundCheck> bound_checks;
  double elapsed_ms = 0;
};

[[nodiscard]] nlohmann::ordered_json to_json(const SolveReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const MaxSepReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const ApproxReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const RunReport& r);

/// Throws ParseError on malformed or wrongly versioned input.
[[nodiscard]] RunReport run_report_from_json(const nlohmann::ordered_json& j);

/// Line-oriented "key: value" records.
[[nodiscard]] std::string to_text(const RunReport& r);

/// Checks every certificate against g (and c for red-blue certificates that
/// do not carry their own coloring). Returns a description of the first failure.
[[nodiscard]] std::optional<std::string> reverify(const RunReport& r, const Graph& g,
                                                  const std::optional<Coloring>& c);

}  // namespace rbsep
