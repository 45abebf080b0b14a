#pragma once

// The embedded regression corpus of worked examples, the run configuration
// shared by the CLI commands, and the corpus runner.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jsyz/arrangements.hpp"

namespace jsyz {

struct RunConfig {
  FieldMode field = FieldMode::Prime;
  bool json = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string filter;
  bool timings = false;
};

/// Seeded family used for examples given only by a construction recipe.
struct BuilderSpec {
  std::string family;  // thmAd, Cj, nodal_lines, max_tjurina, line_times, conic_times
  int n1 = 0, n2 = 0, d = 0, j = 0;
  std::string variant;  // plain, x, xy, xyz
  std::string base;     // polynomial for line_times / conic_times
};

struct Expected {
  std::optional<std::vector<int>> exponents;
  std::optional<std::vector<int>> epsilons;
  std::optional<long> tau;
  std::optional<long> nu;
  std::optional<int> type;
  std::optional<std::string> subtype;
  std::optional<std::map<int, int>> census;
  std::optional<bool> triple_points_joined;
};

struct CorpusEntry {
  std::string name;
  std::string source;
  std::optional<std::string> polynomial;
  std::optional<std::vector<std::string>> lines;
  std::optional<BuilderSpec> builder;
  Expected expected;
};

/// Throws InputError on malformed JSON or an entry without exactly one of
/// polynomial / lines / builder.
std::vector<CorpusEntry> parse_corpus(const std::string& json_text);
/// The corpus compiled into the library.
const std::string& embedded_corpus_text();

struct CorpusResult {
  std::string name;
  std::string source;
  /// Empty when the entry could not be analyzed; see error.
  std::optional<CurveReport> report;
  std::optional<ArrangementCombinatorics> comb;
  std::vector<std::string> lines;  // the realized arrangement, if any
  std::string polynomial;          // the realized polynomial
  /// Expected value comparisons, one per expected field.
  std::vector<Check> expectations;
  std::string error;
  bool consistency_error = false;

  bool pass() const;
};

CorpusResult run_entry(const CorpusEntry& e, const RunConfig& cfg);
/// Entries whose name contains cfg.filter, run up to cfg.jobs at a time;
/// results are in corpus order.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, const RunConfig& cfg);

/// 0 when every result passes, 3 if some failure is an internal
/// consistency failure, 2 otherwise.
int corpus_exit_code(const std::vector<CorpusResult>& results);

}  // namespace jsyz
