#include <gtest/gtest.h>

#include <algorithm>

#include "jsyz/errors.hpp"
#include "jsyz/invariants.hpp"

using namespace jsyz;

namespace {

// Coefficients of (1 + t + ... + t^(d-2))^3: the Hilbert series of the
// Milnor algebra of a smooth curve, whose partials form a regular sequence.
std::vector<long> smooth_hilbert(int d) {
  std::vector<long> one(static_cast<std::size_t>(d - 1), 1), acc = {1};
  for (int r = 0; r < 3; ++r) {
    std::vector<long> next(acc.size() + one.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < one.size(); ++j) next[i + j] += acc[i];
    acc = next;
  }
  return acc;
}

std::string fermat(int d) {
  const auto e = std::to_string(d);
  return "x^" + e + "+y^" + e + "+z^" + e;
}

SyzygySummary fake(int d, std::vector<int> exps, std::vector<int> eps) {
  SyzygySummary s;
  s.d = d;
  s.m = static_cast<int>(exps.size());
  s.exponents = std::move(exps);
  s.epsilons = std::move(eps);
  return s;
}

const Check* find_check(const CurveReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Hilbert, SmoothCurvesMatchCompleteIntersectionSeries) {
  for (int d = 3; d <= 6; ++d) {
    const auto f = parse_poly(fermat(d));
    const auto want = smooth_hilbert(d);
    for (int k = 0; k <= 3 * d; ++k) {
      const long w = k < static_cast<int>(want.size()) ? want[static_cast<std::size_t>(k)] : 0;
      EXPECT_EQ(hilbert_M(f, k, FieldMode::Rational), w) << "d=" << d << " k=" << k;
      EXPECT_EQ(hilbert_M(f, k, FieldMode::Prime), w);
    }
    EXPECT_EQ(tjurina(f), 0);
  }
}

TEST(Tjurina, KnownTotals) {
  // Three A_{j-1} points for the symmetric family: 3 (j-1)^2.
  EXPECT_EQ(tjurina(parse_poly("x^3*y^3+y^3*z^3+x^3*z^3"), FieldMode::Prime), 12);
  // One node.
  EXPECT_EQ(tjurina(parse_poly("x*y*z^2+x^4+y^4")), 1);
  // Cusp A_2.
  EXPECT_EQ(tjurina(parse_poly("x^4+x^2*z^2+y^3*z")), 2);
  // E_7 point.
  EXPECT_EQ(tjurina(parse_poly("x^5+y^5+y*z*(x^3+y^2*z)")), 7);
  // Six lines in general position: 15 nodes.
  EXPECT_EQ(tjurina(parse_poly("x*y*z*(x+y+z)*(x+2*y+3*z)*(x+4*y+9*z)")), 15);
}

TEST(Tjurina, RejectsNonReducedInput) {
  EXPECT_THROW(tjurina(parse_poly("x^2*y*z")), InputError);
  EXPECT_THROW(tjurina(parse_poly("(x^2+y^2+z^2)^2")), InputError);
}

TEST(Saturation, TopDegreesEqualTauAndSmoothCurvesAreSaturated) {
  const auto sm = saturation_dims(parse_poly(fermat(4)));
  EXPECT_TRUE(std::all_of(sm.begin(), sm.end(), [](long v) { return v == 0; }));
  const auto f = parse_poly("x*y*(x^4+y^4-z^4)");
  const auto sat = saturation_dims(f, FieldMode::Prime);
  ASSERT_EQ(sat.size(), 19u);
  EXPECT_EQ(sat.back(), 9);
  // S/I_f is the coordinate ring of a zero-dimensional scheme: nondecreasing.
  for (std::size_t k = 1; k < sat.size(); ++k) EXPECT_LE(sat[k - 1], sat[k]);
}

TEST(FreenessDefect, SmoothCurveNuIsCentralCoefficient) {
  for (int d = 3; d <= 6; ++d) {
    const auto r = analyze(parse_poly(fermat(d)));
    const auto h = smooth_hilbert(d);
    EXPECT_EQ(r.nu, *std::max_element(h.begin(), h.end())) << d;
    EXPECT_EQ(r.nu, nu_from_mdr(d, d - 1, 0));
  }
}

TEST(DpwBounds, ValuesQuotedInTheWorkedExamples) {
  EXPECT_EQ(dpw_bounds(4, 3).tau_max_strong, 3);
  EXPECT_EQ(dpw_bounds(5, 4).tau_max_strong, 6);
  EXPECT_EQ(dpw_bounds(4, 2).tau_min, 3);
  EXPECT_EQ(dpw_bounds(5, 3).tau_min, 4);
  EXPECT_EQ(dpw_bounds(5, 2).tau_min, 8);
  EXPECT_EQ(dpw_bounds(4, 1).tau_min, 6);
  EXPECT_FALSE(dpw_bounds(6, 2).tau_max_strong.has_value());
  EXPECT_THROW(dpw_bounds(5, 5), InputError);
}

TEST(Classification, SubtypesFromExponentsAndShifts) {
  EXPECT_EQ(classify(fake(6, {4, 4, 5}, {3})), Subtype::ThreeA);
  EXPECT_EQ(classify(fake(4, {3, 3, 3, 4}, {2, 1})), Subtype::ThreeB);
  EXPECT_EQ(classify(fake(11, {6, 7, 8, 9}, {1, 2})), Subtype::ThreeBPrime);
  EXPECT_EQ(classify(fake(9, {5, 6, 7, 7, 7}, {1, 1, 1})), Subtype::ThreeC);
  EXPECT_EQ(classify(fake(9, {4, 4}, {})), Subtype::Free);
  EXPECT_EQ(classify(fake(8, {4, 4, 6}, {2})), Subtype::PlusOne);
  EXPECT_EQ(classify(fake(7, {4, 4, 5}, {2})), Subtype::TwoA);
  EXPECT_EQ(classify(fake(8, {4, 5, 6, 6}, {1, 1})), Subtype::TwoB);
  EXPECT_EQ(classify(fake(6, {4, 5, 5}, {2})), Subtype::Other);
  EXPECT_THROW(classify(fake(6, {4, 4, 5, 5}, {1, 1})), ConsistencyError);
  EXPECT_EQ(subtype_name(Subtype::ThreeBPrime, 3), "3B'");
  EXPECT_EQ(subtype_name(Subtype::Other, 4), "Other(4)");
}

TEST(ClosedFormulas, TypeThreeTauAndNu) {
  EXPECT_EQ(type3_tau(fake(6, {4, 4, 5}, {3}), Subtype::ThreeA), 9);
  EXPECT_EQ(type3_tau(fake(4, {3, 3, 3, 4}, {2, 1}), Subtype::ThreeB), 1);
  EXPECT_EQ(type3_tau(fake(11, {6, 7, 8, 9}, {1, 2}), Subtype::ThreeBPrime), 64);
  EXPECT_EQ(type3_tau(fake(9, {5, 6, 7, 7, 7}, {1, 1, 1}), Subtype::ThreeC), 40);
  EXPECT_EQ(type3_nu(fake(6, {4, 4, 5}, {3}), Subtype::ThreeA)->value, 10);
  EXPECT_EQ(type3_nu(fake(4, {3, 3, 3, 4}, {2, 1}), Subtype::ThreeB)->value, 6);
  EXPECT_EQ(type3_nu(fake(11, {6, 7, 8, 9}, {1, 2}), Subtype::ThreeBPrime)->value, 11);
  EXPECT_EQ(type3_nu(fake(9, {5, 6, 7, 7, 7}, {1, 1, 1}), Subtype::ThreeC)->value, 8);
  EXPECT_FALSE(type3_tau(fake(7, {4, 4, 5}, {2}), Subtype::TwoA).has_value());
}

TEST(NTable, DualityRouteMatchesSaturationRoute) {
  for (const char* f : {"x*y*(x^4+y^4-z^4)", "x^4+y^4+x*y*z*(x+z)", "x*(x^3+y^3+z^3)", "x*y*z*(x^3+y^3+z^3)"}) {
    const auto r = analyze(parse_poly(f));
    EXPECT_EQ(n_table_from_syzygies(r.d, r.syzygy.d0_dims, r.tau), r.n_table) << f;
  }
}

TEST(Analyze, AllChecksPassOnTypeThreeExamples) {
  for (const char* f : {"x*y*(x^4+y^4-z^4)", "x^4+y^4+x*y*z*(x+z)", "x^2*y^2+y^2*z^2+x^2*z^2",
                        "x^5+y^5+y*z*(x^3+y^2*z)", "(x^2+y^2+z^2)*(x^3+2*y^3+3*z^3)"}) {
    const auto r = analyze(parse_poly(f));
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << f << ": " << c.name << " " << c.expected << " vs " << c.actual;
    EXPECT_EQ(r.type_t, 3);
    ASSERT_NE(find_check(r, "type3_tau_formula"), nullptr);
    ASSERT_NE(find_check(r, "type3_nu_formula"), nullptr);
  }
}

TEST(Analyze, MaximalTjurinaEquivalence) {
  const auto q = analyze(parse_poly("x^2*y^2+y^2*z^2+x^2*z^2"));
  EXPECT_TRUE(is_maximal_tjurina(q));
  ASSERT_TRUE(maximal_tjurina_test(q).has_value());
  EXPECT_TRUE(maximal_tjurina_test(q)->left);
  EXPECT_TRUE(maximal_tjurina_test(q)->right);
  const auto n = analyze(parse_poly("x*y*z^2+x^4+y^4"));
  EXPECT_FALSE(is_maximal_tjurina(n));
  EXPECT_TRUE(maximal_tjurina_test(n)->agrees());
}

TEST(Analyze, MinimalTjurinaEquivalence) {
  // x(x^3+y^3+z^3): exponents (2,3,3), tau = tau_min(4,2) = 3.
  const auto r = analyze(parse_poly("x*(x^3+y^3+z^3)"));
  const auto t = minimal_tjurina_test(r);
  EXPECT_TRUE(t.left);
  EXPECT_TRUE(t.right);
}

TEST(Analyze, PrimitiveScalingDoesNotChangeTheReport) {
  const auto a = analyze(parse_poly("x*y*(x^4+y^4-z^4)"));
  const auto b = analyze(parse_poly("-7/3*x*y*(x^4+y^4-z^4)"));
  EXPECT_EQ(a.syzygy.exponents, b.syzygy.exponents);
  EXPECT_EQ(a.tau, b.tau);
  EXPECT_EQ(a.nu, b.nu);
  EXPECT_EQ(a.hilbert_M, b.hilbert_M);
}

TEST(Analyze, TauIsInvariantUnderLinearChangeOfCoordinates) {
  // f(x + 2y, y - z, x + z) has the same singularities as f.
  const auto f = parse_poly("x^4+y^4+x*y*z*(x+z)");
  const auto g = parse_poly("(x+2*y)^4+(y-z)^4+(x+2*y)*(y-z)*(x+z)*(x+2*y+x+z)");
  const auto a = analyze(f), b = analyze(g);
  EXPECT_EQ(a.tau, b.tau);
  EXPECT_EQ(a.syzygy.exponents, b.syzygy.exponents);
  EXPECT_EQ(a.nu, b.nu);
}
