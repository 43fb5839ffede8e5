#include "rbsep/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "rbsep/io.hpp"

namespace rbsep {

using nlohmann::ordered_json;

std::string coloring_text(const Coloring& c) {
  std::string out;
  for (Color col : c.colors()) out += col == Color::Red ? 'R' : 'B';
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::RedBlue: return "red-blue";
    case WitnessKind::Separating: return "separating";
    case WitnessKind::Dominating: return "dominating";
  }
  return "?";
}

WitnessKind witness_kind_from_string(const std::string& s) {
  if (s == "red-blue") return WitnessKind::RedBlue;
  if (s == "separating") return WitnessKind::Separating;
  if (s == "dominating") return WitnessKind::Dominating;
  throw Error(ErrorKind::InvalidArgument, "unknown witness kind '" + s + "'");
}

namespace {

double to_ms(std::chrono::microseconds us) { return static_cast<double>(us.count()) / 1000.0; }

CheckStatus status_from_string(const std::string& s) {
  if (s == "holds") return CheckStatus::Holds;
  if (s == "fails") return CheckStatus::Fails;
  if (s == "skipped") return CheckStatus::Skipped;
  throw ParseError(0, "unknown check status '" + s + "'");
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_number_unsigned(); })) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(v[i].get<std::size_t>());
    }
    return out;
  }
  return v.dump();
}

void flatten(const std::string& prefix, const ordered_json& j, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, out);
    return;
  }
  out << prefix << ": " << scalar_text(j) << '\n';
}

}  // namespace

ordered_json to_json(const SolveReport& r) {
  return ordered_json{{"version", kReportVersion},
                      {"optimum", r.optimum},
                      {"witness", r.witness.to_vector()},
                      {"method", to_string(r.method)},
                      {"nodes_explored", r.nodes_explored},
                      {"elapsed_ms", to_ms(r.elapsed)}};
}

ordered_json to_json(const MaxSepReport& r) {
  return ordered_json{{"version", kReportVersion},
                      {"value", r.value},
                      {"worst_coloring", coloring_text(r.worst_coloring)},
                      {"witness", r.witness.to_vector()},
                      {"per_coloring_count", r.per_coloring_count},
                      {"skipped", r.skipped},
                      {"nodes_explored", r.nodes_explored},
                      {"elapsed_ms", to_ms(r.elapsed)}};
}

ordered_json to_json(const ApproxReport& r) {
  return ordered_json{{"version", kReportVersion},
                      {"size", r.solution.size()},
                      {"solution", r.solution.to_vector()},
                      {"guarantee", r.guarantee},
                      {"optimum_lower_bound", r.optimum_lower_bound}};
}

ordered_json to_json(const RunReport& r) {
  ordered_json j;
  j["version"] = kReportVersion;
  j["command"] = r.command;
  j["inputs"] = ordered_json::array();
  for (const auto& in : r.inputs)
    j["inputs"].push_back({{"role", in.role}, {"path", in.path}, {"fnv1a", in.fnv1a}});
  j["results"] = r.results;
  j["certificates"] = ordered_json::array();
  for (const auto& c : r.certificates) {
    ordered_json cj{{"kind", to_string(c.kind)}, {"vertices", c.vertices}};
    if (c.coloring) cj["coloring"] = *c.coloring;
    j["certificates"].push_back(std::move(cj));
  }
  j["bound_checks"] = ordered_json::array();
  for (const auto& b : r.bound_checks) {
    ordered_json bj{{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"status", to_string(b.status)}};
    if (!b.note.empty()) bj["note"] = b.note;
    j["bound_checks"].push_back(std::move(bj));
  }
  j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return j;
}

RunReport run_report_from_json(const ordered_json& j) {
  try {
    if (j.at("version").get<int>() != kReportVersion)
      throw ParseError(0, "unsupported report version " + j.at("version").dump());
    RunReport r;
    r.command = j.at("command").get<std::vector<std::string>>();
    for (const auto& in : j.at("inputs"))
      r.inputs.push_back({in.at("role").get<std::string>(), in.at("path").get<std::string>(),
                          in.at("fnv1a").get<std::string>()});
    r.results = j.at("results");
    for (const auto& cj : j.at("certificates")) {
      Certificate c;
      c.kind = witness_kind_from_string(cj.at("kind").get<std::string>());
      c.vertices = cj.at("vertices").get<std::vector<Vertex>>();
      if (cj.contains("coloring")) c.coloring = cj.at("coloring").get<std::string>();
      r.certificates.push_back(std::move(c));
    }
    for (const auto& bj : j.at("bound_checks"))
      r.bound_checks.push_back({bj.at("name").get<std::string>(), bj.at("lhs").get<double>(),
                                bj.at("rhs").get<double>(),
                                status_from_string(bj.at("status").get<std::string>()),
                                bj.value("note", std::string{})});
    r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << "command:";
  for (const auto& a : r.command) out << ' ' << a;
  out << '\n';
  for (const auto& in : r.inputs) out << "input." << in.role << ": " << in.path << " fnv1a=" << in.fnv1a << '\n';
  flatten("", r.results, out);
  for (const auto& c : r.certificates) {
    out << "certificate." << to_string(c.kind) << ": " << join(c.vertices);
    if (c.coloring) out << " coloring=" << *c.coloring;
    out << '\n';
  }
  for (const auto& b : r.bound_checks) {
    out << "check: " << b.name << " lhs=" << format_number(b.lhs) << " rhs=" << format_number(b.rhs)
        << ' ' << to_string(b.status);
    if (!b.note.empty()) out << " (" << b.note << ')';
    out << '\n';
  }
  out << "elapsed_ms: " << format_number(r.elapsed_ms) << '\n';
  return out.str();
}

std::optional<std::string> reverify(const RunReport& r, const Graph& g,
                                    const std::optional<Coloring>& c) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < r.certificates.size(); ++i) {
    const auto& cert = r.certificates[i];
    const std::string tag = "certificate " + std::to_string(i) + " (" + to_string(cert.kind) + ")";
    for (Vertex v : cert.vertices)
      if (v >= n) return tag + ": vertex " + std::to_string(v) + " out of range";
    const VertexSet s = VertexSet::from_indices(n, cert.vertices);
    if (s.size() != cert.vertices.size()) return tag + ": repeated vertex";
    switch (cert.kind) {
      case WitnessKind::RedBlue: {
        std::optional<Coloring> col = c;
        if (cert.coloring) col = io::coloring_from_string(*cert.coloring, n);
        if (!col) return tag + ": no coloring to check against";
        if (auto bad = verify_rb_separating(g, *col, s))
          return tag + ": pair (" + std::to_string(bad->red) + ", " + std::to_string(bad->blue) +
                 ") not separated";
        break;
      }
      case WitnessKind::Separating:
        if (auto bad = verify_separating(g, s))
          return tag + ": pair (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) +
                 ") not separated";
        break;
      case WitnessKind::Dominating:
        if (auto bad = verify_dominating(g, s))
          return tag + ": vertex " + std::to_string(*bad) + " not dominated";
        break;
    }
  }
  return std::nullopt;
}

}  // namespace rbsep
