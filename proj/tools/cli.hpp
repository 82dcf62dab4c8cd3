#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scf/torus.hpp"

namespace scf::cli {

enum class Command { Circle, So3, So3Search, WeylConj, Fusion, Sympair };

/// One resolved invocation. main() fills this from flags; tests construct it
/// directly.
struct RunConfig {
  Command command = Command::Circle;
  bool json_output = false;
  int workers = 1;
  std::string out_path;

  // circle
  std::vector<std::int64_t> weights;
  std::int64_t m_max = 0;  // 0: use the default bound n * max(a)^2

  // so3 / so3-search
  std::vector<int> spins;
  std::int64_t q_max = 500;
  int sum_max = 0;

  // weyl-conj: torus elements as JSON (or comma-separated turns + --group)
  std::string x_text;
  std::string y_text;
  std::string group_text;

  // fusion: groups as "so 7"-style tokens or JSON tags
  std::string sub_text;
  std::string amb_text;
  std::int64_t torsion_q = 6;

  // sympair
  bool list_catalog = false;
  std::string pair_family;
  int n = 0;
  int p = 0;
  int q = 0;
  std::string theta = "1/5";
};

// Exit codes: positive results exit 0, established failures/negative
// verdicts exit 10, usage errors 2, engine refusals 3.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 10;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefusal = 3;

struct Report {
  std::string tool_version;
  std::string command;
  nlohmann::json config;
  std::vector<nlohmann::json> verdicts;
  std::vector<std::string> disclaimers;
  std::int64_t wall_time_ms = 0;
  int exit_code = 0;
  std::string text;  // human-readable rendering of the verdicts

  nlohmann::json to_json() const;
};

/// Dispatches to the engines, re-verifies every failure witness before
/// emission, and assembles the report. Throws invalid_input / refusal for
/// the caller to map to exit codes.
Report run(const RunConfig& config);

struct ConjugacyQueryResult {
  bool conjugate = false;
  CanonicalForm canonical_x;
  CanonicalForm canonical_y;
};

/// Parses two serialized torus elements (shared group tag taken from
/// group_text when the elements are bare turn lists) and compares their
/// canonical forms.
ConjugacyQueryResult conjugacy_query(const std::string& x_text, const std::string& y_text,
                                     const std::string& group_text = "");

/// "u 3" / "su 4" / "so 8" / "sp 2" / "o 7" tokens or a JSON group object.
GroupTag parse_group_spec(const std::string& text);

}  // namespace scf::cli
