#pragma once

// Bounded random search for curves with prescribed exponents. Absence of a
// hit is reported as such, never as a nonexistence statement.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jsyz/syzygy_engine.hpp"

namespace jsyz {

struct SearchParams {
  int d = 4;
  std::vector<int> target;
  int coeff_bound = 3;
  int samples = 200;
  std::uint64_t seed = 1;
  /// Support sizes are drawn uniformly from [min_terms, max_terms].
  int min_terms = 3;
  int max_terms = 6;
  int jobs = 1;
  FieldMode field = FieldMode::Prime;
};

struct SearchHit {
  int sample = 0;
  std::string polynomial;
  long tau = 0;
};

struct SearchResult {
  int samples = 0;
  /// Samples rejected as non-reduced, with non-isolated singularities, or
  /// of too small degree after cancellation.
  int skipped = 0;
  std::vector<SearchHit> hits;
  std::map<std::vector<int>, int> histogram;
};

/// Sample i only depends on (seed, i), so results do not depend on jobs.
SearchResult run_search(const SearchParams& p);

/// The random polynomial of sample i.
HomogeneousPoly search_sample(const SearchParams& p, int i);

}  // namespace jsyz
