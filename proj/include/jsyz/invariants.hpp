#pragma once

// Hilbert function of the Milnor algebra M(f) = S/J_f, Tjurina number,
// saturation of J_f and the Jacobian module N(f), freeness defect, type and
// subtype, and the closed formulas they are checked against.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jsyz/check.hpp"
#include "jsyz/syzygy_engine.hpp"

namespace jsyz {

enum class Subtype { Free, PlusOne, TwoA, TwoB, ThreeA, ThreeB, ThreeBPrime, ThreeC, Other };

/// "Free", "PlusOne", "2A", "2B", "3A", "3B", "3B'", "3C", "Other(t)".
std::string subtype_name(Subtype s, int type_t);

struct DpwBounds {
  long tau_min = 0;
  long tau_max = 0;
  /// Present when 2*d1 >= d.
  std::optional<long> tau_max_strong;
};

DpwBounds dpw_bounds(int d, int d1);

struct CurveReport {
  std::string name;
  int d = 0;
  FieldMode field = FieldMode::Prime;
  SyzygySummary syzygy;
  long tau = 0;
  std::vector<long> hilbert_M;  // k = 0 .. 3d
  std::vector<long> n_table;    // k = 0 .. 3d
  long nu = 0;
  int type_t = 0;
  Subtype subtype = Subtype::Other;
  std::optional<SecondSyzygyDegreeTable> second_syzygy;
  std::vector<Check> checks;
  std::map<std::string, double> timings_ms;

  bool all_pass() const;
  /// True if some failed check is an internal-consistency equivalence.
  bool consistency_failure() const;
  std::string subtype_label() const { return subtype_name(subtype, type_t); }
};

/// dim M(f)_k by a direct rank computation.
long hilbert_M(const HomogeneousPoly& f, int k, FieldMode mode = FieldMode::Rational);

/// Stable value of dim M(f)_k on k = 3d-5 .. 3d. Throws InputError when the
/// window is not constant.
long tjurina(const HomogeneousPoly& f, FieldMode mode = FieldMode::Rational);

/// dim (S/I_f)_k for k = 0 .. 3d, I_f the saturation of J_f. The top degree
/// 3d+1 is seeded with J_f itself and confirmed against the quotient of the
/// next degree. Throws ConsistencyError if that confirmation fails.
std::vector<long> saturation_dims(const HomogeneousPoly& f, FieldMode mode = FieldMode::Rational);

struct FreenessDefect {
  long nu = 0;
  std::vector<long> n_table;
};

FreenessDefect freeness_defect(const std::vector<long>& hilbert, const std::vector<long>& saturation);

/// nu from d, d_1 and tau alone (two regimes split at d_1 = (d-1)/2).
long nu_from_mdr(int d, int d1, long tau);

/// n(f)_k for k = 0 .. 3d from the syzygy dimensions and tau, using
/// n_{k+d-1} = a_k + a_{d-4-k} - 3 chi(k) + chi(k+d-1) - tau with
/// a_i = dim D_0(f)_i and chi(i) = (i+1)(i+2)/2 for every integer i.
std::vector<long> n_table_from_syzygies(int d, const std::vector<std::size_t>& d0_dims, long tau);

int type_of(const SyzygySummary& s);

/// Throws ConsistencyError when t = 3 and the epsilon pattern is none of the
/// four admissible ones.
Subtype classify(const SyzygySummary& s);

/// Closed formula for tau, for the four type-3 subtypes.
std::optional<long> type3_tau(const SyzygySummary& s, Subtype sub);

struct NuFormula {
  long value = 0;
  long lower_bound = 0;
};
/// Closed formula for nu by the d_1 versus d_2 branch.
std::optional<NuFormula> type3_nu(const SyzygySummary& s, Subtype sub);

struct EquivalenceTest {
  bool left = false;
  bool right = false;
  bool agrees() const { return left == right; }
};

/// left: tau = tau_min(d, d_1); right: m = 3 and d_2 = d_3 = d - 1.
EquivalenceTest minimal_tjurina_test(const CurveReport& r);

/// Only defined for 2 d_1 >= d. left: tau = tau'_max(d, d_1) and
/// 2 d_1 = d + 2; right: subtype 3C with five equal exponents.
std::optional<EquivalenceTest> maximal_tjurina_test(const CurveReport& r);
bool is_maximal_tjurina(const CurveReport& r);

struct AnalysisOptions {
  FieldMode field = FieldMode::Prime;
};

/// Full pipeline with every check evaluated. Throws InputError on input the
/// engine does not accept (degree < 3, non-reduced or non-isolated
/// singularities) and ConsistencyError on internal failures.
CurveReport analyze(const HomogeneousPoly& f, const AnalysisOptions& opt = {}, std::string name = {});

}  // namespace jsyz
