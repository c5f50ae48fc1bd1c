#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "irr/compactification.hpp"
#include "irr/discriminant.hpp"
#include "irr/mpoly.hpp"
#include "irr/oracle.hpp"
#include "irr/place.hpp"

namespace irr {

inline constexpr int kReportSchemaVersion = 1;

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  bool oracle = false;
  std::vector<Place> at;  // extra places to evaluate (and cross-check)
  double rho_magnitude = 1e6;
  bool keep_resolution = false;
};

struct OracleComparison {
  Place place;
  int symbolic = 0;
  int chi = 0;
  int ir = 0;
  bool stable = true;
  bool agrees = false;
  std::vector<int> per_seed;
};

struct Report {
  std::string f;
  std::string g;
  std::uint64_t seed = 0;
  bool dependent = false;
  bool g_constant = false;
  std::optional<int> chi_f;
  std::vector<PlaceValue> finite_places;  // nonzero entries only
  InfinityValue infinity;
  std::vector<PlaceValue> at;  // values at requested places
  std::optional<PushforwardPoly> pushforward;
  std::optional<MPoly> image_curve;
  std::optional<Resolution> resolution;
  std::optional<std::vector<OracleComparison>> oracle;
  std::string oracle_error;
  double oracle_rho_magnitude = 0;
  double elapsed_ms = 0;

  /// False when the oracle ran and disagreed (or could not run).
  [[nodiscard]] bool oracle_agrees() const;
  /// Value at any place, zero when the place is not listed.
  [[nodiscard]] int ir_at(const Place& place) const;
};

/// Full irregularity profile of f_+(O e^g). Throws DegenerateInput when f is constant.
Report analyze(const MPoly& f, const MPoly& g, const AnalyzeOptions& options = {});

nlohmann::json to_json(const Report& report);
nlohmann::json resolution_to_json(const Resolution& resolution);
std::string to_text(const Report& report);

struct CorpusSummary {
  int entries = 0;
  int passed = 0;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  [[nodiscard]] bool ok() const { return passed == entries; }
};

/// Runs every JSON line {name?, f, g, seed?, at?, oracle?, expected} and compares
/// the expected fragment against the report. Throws ParseError on malformed lines.
CorpusSummary run_corpus(const std::string& path);
CorpusSummary run_corpus_lines(const std::vector<std::string>& lines);

/// True when every key of `expected` appears in `actual` with an equal value
/// (objects recursively, everything else exactly). Mismatches go to `diff`.
bool json_fragment_matches(const nlohmann::json& expected, const nlohmann::json& actual, const std::string& path,
                           std::vector<std::string>& diff);

}  // namespace irr
