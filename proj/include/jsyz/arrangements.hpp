#pragma once

// Line arrangements: intersection points and their multiplicities, the
// bounds specific to arrangements, the small-degree classification rules,
// and deterministic builders for the arrangement and curve families used by
// the corpus.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jsyz/invariants.hpp"

namespace jsyz {

class LineArrangement {
 public:
  /// Throws InputError on a form that is not linear, a zero form, or two
  /// proportional lines.
  explicit LineArrangement(std::vector<HomogeneousPoly> lines);
  static LineArrangement parse(const std::vector<std::string>& lines);

  int d() const { return static_cast<int>(lines_.size()); }
  const std::vector<HomogeneousPoly>& lines() const { return lines_; }
  /// Coefficients (a, b, c) of ax + by + cz.
  std::array<Rational, 3> coefficients(std::size_t i) const;
  HomogeneousPoly product() const;
  std::vector<std::string> to_strings() const;

 private:
  std::vector<HomogeneousPoly> lines_;
};

/// Scaled so the last nonzero coordinate is 1.
using ProjectivePoint = std::array<Rational, 3>;
ProjectivePoint canonical_point(ProjectivePoint p);
std::string to_string(const ProjectivePoint& p);

struct IntersectionPoint {
  ProjectivePoint point;
  std::vector<int> lines;  // indices into the arrangement
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

struct ArrangementCombinatorics {
  int d = 0;
  std::vector<IntersectionPoint> points;
  std::map<int, int> n;  // multiplicity -> number of points
  int max_mult = 0;
  long tau_comb = 0;
  /// Some two triple points lie on a common line of the arrangement.
  bool triple_points_joined = false;

  int count(int mult) const {
    auto it = n.find(mult);
    return it == n.end() ? 0 : it->second;
  }
  bool nodal() const { return max_mult <= 2; }
};

/// Throws ConsistencyError if the pair count identity fails.
ArrangementCombinatorics combinatorics(const LineArrangement& arr);

/// d_m <= reg <= d-2 and d_1 <= d - m(A).
std::vector<Check> check_arrangement_bounds(const ArrangementCombinatorics& comb, const SyzygySummary& s);

enum class Verdict { Consistent, Inconsistent, NotCovered };
std::string verdict_name(Verdict v);

struct ArrangementVerdict {
  Verdict verdict = Verdict::NotCovered;
  std::string rule;      // which statement was applied
  std::string expected;  // what it predicts for this census
};

/// Compares census, exponents, tau and subtype with the classification of
/// arrangements of 6, 7 and 8 lines.
ArrangementVerdict classify_small_arrangement(const ArrangementCombinatorics& comb, const CurveReport& report);

struct ArrangementReport {
  ArrangementCombinatorics comb;
  CurveReport curve;
  /// Present for 6, 7 and 8 lines.
  std::optional<ArrangementVerdict> verdict;
};

/// Curve analysis of the product of the lines, plus the combinatorial Tjurina
/// number cross-check, the arrangement bounds and the small-degree verdict
/// appended to curve.checks.
ArrangementReport analyze_arrangement(const LineArrangement& arr, const AnalysisOptions& opt = {},
                                      std::string name = {});

/// Deterministic stream of "generic" integer coefficients in [-97, 97].
class CoefficientStream {
 public:
  explicit CoefficientStream(std::uint64_t seed);
  int next();
  HomogeneousPoly line();
  /// A line through the given point.
  HomogeneousPoly line_through(const ProjectivePoint& p);

 private:
  std::mt19937_64 rng_;
};

/// Mixes a seed and an attempt counter into a fresh seed.
std::uint64_t rehash(std::uint64_t seed, std::uint64_t attempt);

/// n1 lines through (0:0:1), n2 lines through (0:1:0), two seeded generic
/// lines. Throws ConsistencyError when no generic pair is found in 32 tries.
LineArrangement build_thmAd(int n1, int n2, std::uint64_t seed);

/// The n1 + n2 lines of build_thmAd without the two generic ones.
LineArrangement build_two_pencils(int n1, int n2);

enum class CjVariant { Plain, X, XY, XYZ };
/// x^j y^j + y^j z^j + x^j z^j, optionally multiplied by x, xy or xyz.
HomogeneousPoly build_Cj_family(int j, CjVariant variant);

/// d seeded lines with only double points.
LineArrangement random_nodal_arrangement(int d, std::uint64_t seed);
/// d seeded lines, three of them concurrent, otherwise only double points.
LineArrangement random_one_triple_arrangement(int d, std::uint64_t seed);
/// A seeded generic line (resp. smooth conic) times f. Genericity is checked
/// through tau(product) = tau(f) + e * deg f for a component of degree e,
/// retrying up to 32 times.
HomogeneousPoly generic_line_times(const HomogeneousPoly& f, std::uint64_t seed);
HomogeneousPoly generic_conic_times(const HomogeneousPoly& f, std::uint64_t seed);

/// Line arrangement of d lines that is maximal Tjurina of type (d, (d+2)/2),
/// found by a seeded search and verified with the syzygy engine. Supported
/// for d = 8 and d = 10.
LineArrangement build_max_tjurina_arrangement(int d, std::uint64_t seed);

}  // namespace jsyz
