#include "jsyz/arrangements.hpp"

#include <algorithm>
#include <set>

#include "jsyz/errors.hpp"

namespace jsyz {

namespace {

std::array<Rational, 3> cross(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_null(const std::array<Rational, 3>& v) {
  return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0;
}

HomogeneousPoly linear_form(const std::array<Rational, 3>& c) {
  HomogeneousPoly l(1);
  l = l + HomogeneousPoly::monomial({1, 0, 0}, c[0]);
  l = l + HomogeneousPoly::monomial({0, 1, 0}, c[1]);
  l = l + HomogeneousPoly::monomial({0, 0, 1}, c[2]);
  return l.primitive();
}

long binom2(long n) { return n * (n - 1) / 2; }

// Number of extra units of tau a point contributes beyond its pair count.
long excess(int mult) { return static_cast<long>(mult - 1) * (mult - 2) / 2; }

}  // namespace

// ------------------------------------------------------- LineArrangement

LineArrangement::LineArrangement(std::vector<HomogeneousPoly> lines) : lines_(std::move(lines)) {
  for (const auto& l : lines_) {
    if (l.degree() != 1) throw InputError("arrangement member is not a linear form: " + l.to_string());
    if (l.is_zero()) throw InputError("arrangement member is the zero form");
  }
  for (std::size_t i = 0; i < lines_.size(); ++i)
    for (std::size_t j = i + 1; j < lines_.size(); ++j)
      if (is_null(cross(coefficients(i), coefficients(j))))
        throw InputError("proportional lines: " + lines_[i].to_string() + " and " + lines_[j].to_string());
}

LineArrangement LineArrangement::parse(const std::vector<std::string>& lines) {
  std::vector<HomogeneousPoly> out;
  for (const auto& s : lines) out.push_back(parse_poly(s));
  return LineArrangement(std::move(out));
}

std::array<Rational, 3> LineArrangement::coefficients(std::size_t i) const {
  const auto& l = lines_[i];
  return {l.coefficient({1, 0, 0}), l.coefficient({0, 1, 0}), l.coefficient({0, 0, 1})};
}

HomogeneousPoly LineArrangement::product() const {
  HomogeneousPoly p = HomogeneousPoly::constant(1);
  for (const auto& l : lines_) p = p * l;
  return p;
}

std::vector<std::string> LineArrangement::to_strings() const {
  std::vector<std::string> out;
  for (const auto& l : lines_) out.push_back(l.to_string());
  return out;
}

ProjectivePoint canonical_point(ProjectivePoint p) {
  for (int i = 2; i >= 0; --i)
    if (sgn(p[static_cast<std::size_t>(i)]) != 0) {
      const Rational s = p[static_cast<std::size_t>(i)];
      for (auto& c : p) c /= s;
      return p;
    }
  throw InputError("zero vector is not a projective point");
}

std::string to_string(const ProjectivePoint& p) {
  return "(" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + ")";
}

ArrangementCombinatorics combinatorics(const LineArrangement& arr) {
  ArrangementCombinatorics c;
  c.d = arr.d();
  std::map<ProjectivePoint, std::set<int>> groups;
  for (int i = 0; i < c.d; ++i)
    for (int j = i + 1; j < c.d; ++j) {
      const auto p = canonical_point(cross(arr.coefficients(static_cast<std::size_t>(i)),
                                           arr.coefficients(static_cast<std::size_t>(j))));
      auto& g = groups[p];
      g.insert(i);
      g.insert(j);
    }
  long pairs = 0;
  for (auto& [p, g] : groups) {
    IntersectionPoint ip{p, std::vector<int>(g.begin(), g.end())};
    const int m = ip.multiplicity();
    ++c.n[m];
    c.max_mult = std::max(c.max_mult, m);
    c.tau_comb += static_cast<long>(m - 1) * (m - 1);
    pairs += binom2(m);
    c.points.push_back(std::move(ip));
  }
  if (pairs != binom2(c.d)) throw ConsistencyError("pair count identity fails for the arrangement");

  std::vector<const IntersectionPoint*> triples;
  for (const auto& p : c.points)
    if (p.multiplicity() == 3) triples.push_back(&p);
  for (std::size_t a = 0; a < triples.size() && !c.triple_points_joined; ++a)
    for (std::size_t b = a + 1; b < triples.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(triples[a]->lines.begin(), triples[a]->lines.end(), triples[b]->lines.begin(),
                            triples[b]->lines.end(), std::back_inserter(common));
      if (!common.empty()) {
        c.triple_points_joined = true;
        break;
      }
    }
  return c;
}

std::vector<Check> check_arrangement_bounds(const ArrangementCombinatorics& comb, const SyzygySummary& s) {
  std::vector<Check> out;
  const int d = comb.d;
  const int dm = s.exponents.back();
  out.push_back({"arrangement_regularity_bound", "d_m <= reg <= " + std::to_string(d - 2),
                 "d_m=" + std::to_string(dm) + " reg=" + std::to_string(s.regularity),
                 dm <= s.regularity && s.regularity <= d - 2});
  out.push_back({"arrangement_first_exponent_bound", "d_1 <= " + std::to_string(d - comb.max_mult),
                 std::to_string(s.exponents[0]), s.exponents[0] <= d - comb.max_mult});
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::NotCovered: break;
  }
  return "not-covered";
}

namespace {

struct Row {
  std::map<int, int> census;  // multiplicity -> count, without the nodes
  long tau;
  Subtype subtype;
  std::vector<int> exponents;
};

std::string describe(const Row& r) {
  std::string s;
  for (const auto& [m, k] : r.census) s += "n" + std::to_string(m) + "=" + std::to_string(k) + " ";
  s += "tau=" + std::to_string(r.tau) + " " + subtype_name(r.subtype, 3) + " (";
  for (std::size_t i = 0; i < r.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(r.exponents[i]);
  return s + ")";
}

std::map<int, int> census_without_nodes(const ArrangementCombinatorics& c) {
  std::map<int, int> out;
  for (const auto& [m, k] : c.n)
    if (m > 2) out[m] = k;
  return out;
}

bool matches(const Row& row, const ArrangementCombinatorics& c, const CurveReport& r) {
  return census_without_nodes(c) == row.census && r.tau == row.tau && r.subtype == row.subtype &&
         r.syzygy.exponents == row.exponents;
}

}  // namespace

ArrangementVerdict classify_small_arrangement(const ArrangementCombinatorics& comb, const CurveReport& report) {
  ArrangementVerdict v;
  const bool type3 = report.type_t == 3;
  const auto census = census_without_nodes(comb);
  auto single = [&](const std::string& rule, const Row& row, bool hypothesis) {
    v.rule = rule;
    v.expected = hypothesis ? describe(row) : "type other than 3";
    if (hypothesis) v.verdict = matches(row, comb, report) ? Verdict::Consistent : Verdict::Inconsistent;
    else v.verdict = type3 ? Verdict::Inconsistent : Verdict::Consistent;
    return v;
  };
  switch (comb.d) {
    case 6:
      return single("six lines: type 3 iff nodal", {{}, 15, Subtype::ThreeC, {4, 4, 4, 4, 4}}, comb.nodal());
    case 7:
      return single("seven lines: type 3 iff nodes and one triple point",
                    {{{3, 1}}, 22, Subtype::ThreeC, {4, 5, 5, 5, 5}}, census == std::map<int, int>{{3, 1}});
    case 8: break;
    default:
      v.rule = "no statement for " + std::to_string(comb.d) + " lines";
      return v;
  }
  const std::vector<Row> rows = {
      {{{3, 4}}, 32, Subtype::ThreeBPrime, {5, 5, 5, 5}},
      {{{3, 3}}, 31, Subtype::ThreeB, {5, 5, 5, 6}},
      {{{3, 5}}, 33, Subtype::ThreeC, {5, 5, 5, 5, 5}},
      {{{3, 4}}, 32, Subtype::ThreeC, {5, 5, 5, 5, 6}},
      {{{3, 3}}, 31, Subtype::ThreeC, {5, 5, 5, 6, 6}},
      {{{3, 2}}, 30, Subtype::ThreeC, {5, 5, 6, 6, 6}},
      {{{4, 1}}, 31, Subtype::ThreeC, {4, 6, 6, 6, 6}},
  };
  const Row two_triples = rows[5];
  if (census == two_triples.census) {
    // The converse direction holds for exactly two triple points.
    v.rule = "eight lines with nodes and exactly two triple points";
    v.expected = describe(two_triples);
    v.verdict = matches(two_triples, comb, report) ? Verdict::Consistent : Verdict::Inconsistent;
    return v;
  }
  if (type3) {
    v.rule = "eight lines of type 3";
    v.expected = "one of the seven listed cases";
    v.verdict = Verdict::Inconsistent;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (matches(rows[i], comb, report)) {
        v.verdict = Verdict::Consistent;
        v.expected = describe(rows[i]);
        v.rule = "eight lines of type 3, case " + std::to_string(i + 1);
      }
    return v;
  }
  v.rule = "eight lines not of type 3: no converse statement applies";
  v.expected = "none";
  return v;
}

ArrangementReport analyze_arrangement(const LineArrangement& arr, const AnalysisOptions& opt, std::string name) {
  ArrangementReport r{combinatorics(arr), analyze(arr.product(), opt, std::move(name)), std::nullopt};
  auto& checks = r.curve.checks;
  checks.push_back({"tau_combinatorial", std::to_string(r.comb.tau_comb), std::to_string(r.curve.tau),
                    r.comb.tau_comb == r.curve.tau, true});
  for (auto& c : check_arrangement_bounds(r.comb, r.curve.syzygy)) checks.push_back(std::move(c));
  if (arr.d() >= 6 && arr.d() <= 8) {
    r.verdict = classify_small_arrangement(r.comb, r.curve);
    checks.push_back({"small_arrangement_classification", r.verdict->expected,
                      verdict_name(r.verdict->verdict) + " (" + r.verdict->rule + ")",
                      r.verdict->verdict != Verdict::Inconsistent});
  }
  return r;
}

// --------------------------------------------------------------- builders

CoefficientStream::CoefficientStream(std::uint64_t seed) : rng_(seed) {}

int CoefficientStream::next() { return static_cast<int>(rng_() % 195) - 97; }

HomogeneousPoly CoefficientStream::line() {
  for (;;) {
    std::array<Rational, 3> c{Rational(next()), Rational(next()), Rational(next())};
    if (!is_null(c)) return linear_form(c);
  }
}

HomogeneousPoly CoefficientStream::line_through(const ProjectivePoint& p) {
  for (;;) {
    std::array<Rational, 3> v{Rational(next()), Rational(next()), Rational(next())};
    const auto c = cross(p, v);
    if (!is_null(c)) return linear_form(c);
  }
}

std::uint64_t rehash(std::uint64_t seed, std::uint64_t attempt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (attempt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr int kAttempts = 32;

// Tries to extend `base` by `extra` lines from the stream; nullopt when the
// result has proportional lines.
std::optional<LineArrangement> try_extend(const std::vector<HomogeneousPoly>& base, int extra,
                                          CoefficientStream& cs) {
  std::vector<HomogeneousPoly> lines = base;
  for (int i = 0; i < extra; ++i) lines.push_back(cs.line());
  try {
    return LineArrangement(std::move(lines));
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

LineArrangement build_two_pencils(int n1, int n2) {
  if (n1 < 2 || n2 < n1) throw InputError("need 2 <= n1 <= n2");
  std::vector<HomogeneousPoly> lines;
  const auto x = HomogeneousPoly::variable(0);
  for (int i = 1; i <= n1; ++i) lines.push_back(HomogeneousPoly::variable(1) - x.scaled(i));
  for (int j = 1; j <= n2; ++j) lines.push_back(HomogeneousPoly::variable(2) - x.scaled(j));
  return LineArrangement(std::move(lines));
}

LineArrangement build_thmAd(int n1, int n2, std::uint64_t seed) {
  const LineArrangement base = build_two_pencils(n1, n2);
  const int d = n1 + n2 + 2;
  std::map<int, int> expected;
  ++expected[n1];
  ++expected[n2];
  expected[2] += static_cast<int>(binom2(d) - binom2(n1) - binom2(n2));
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    CoefficientStream cs(rehash(seed, static_cast<std::uint64_t>(attempt)));
    auto arr = try_extend(base.lines(), 2, cs);
    if (arr && combinatorics(*arr).n == expected) return *arr;
  }
  throw ConsistencyError("no generic pair of lines found after 32 attempts");
}

HomogeneousPoly build_Cj_family(int j, CjVariant variant) {
  if (j < 3) throw InputError("j must be at least 3");
  const auto x = HomogeneousPoly::variable(0);
  const auto y = HomogeneousPoly::variable(1);
  const auto z = HomogeneousPoly::variable(2);
  const auto u = static_cast<unsigned>(j);
  HomogeneousPoly f = x.pow(u) * y.pow(u) + y.pow(u) * z.pow(u) + x.pow(u) * z.pow(u);
  switch (variant) {
    case CjVariant::Plain: return f;
    case CjVariant::X: return x * f;
    case CjVariant::XY: return x * y * f;
    case CjVariant::XYZ: return x * y * z * f;
  }
  return f;
}

LineArrangement random_nodal_arrangement(int d, std::uint64_t seed) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    CoefficientStream cs(rehash(seed, static_cast<std::uint64_t>(attempt)));
    auto arr = try_extend({}, d, cs);
    if (arr && combinatorics(*arr).nodal()) return *arr;
  }
  throw ConsistencyError("no nodal arrangement found after 32 attempts");
}

LineArrangement random_one_triple_arrangement(int d, std::uint64_t seed) {
  if (d < 3) throw InputError("need at least three lines");
  const std::map<int, int> expected{{2, static_cast<int>(binom2(d) - 3)}, {3, 1}};
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    CoefficientStream cs(rehash(seed, static_cast<std::uint64_t>(attempt)));
    ProjectivePoint p{Rational(cs.next()), Rational(cs.next()), Rational(cs.next())};
    if (is_null(p)) continue;
    std::vector<HomogeneousPoly> base;
    for (int i = 0; i < 3; ++i) base.push_back(cs.line_through(p));
    auto arr = try_extend(base, d - 3, cs);
    if (arr && combinatorics(*arr).n == expected) return *arr;
  }
  throw ConsistencyError("no arrangement with one triple point found after 32 attempts");
}

namespace {

HomogeneousPoly generic_times(const HomogeneousPoly& f, int e, std::uint64_t seed) {
  const long tau_f = tjurina(f, FieldMode::Prime);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    CoefficientStream cs(rehash(seed, static_cast<std::uint64_t>(attempt)));
    HomogeneousPoly g(e);
    for (const auto& m : MonomialBasis(e)) g = g + HomogeneousPoly::monomial(m, cs.next());
    if (g.is_zero()) continue;
    const HomogeneousPoly h = g.primitive() * f;
    try {
      if (tjurina(h, FieldMode::Prime) == tau_f + static_cast<long>(e) * f.degree()) return h;
    } catch (const InputError&) {
    }
  }
  throw ConsistencyError("no generic component found after 32 attempts");
}

}  // namespace

HomogeneousPoly generic_line_times(const HomogeneousPoly& f, std::uint64_t seed) { return generic_times(f, 1, seed); }
HomogeneousPoly generic_conic_times(const HomogeneousPoly& f, std::uint64_t seed) { return generic_times(f, 2, seed); }

LineArrangement build_max_tjurina_arrangement(int d, std::uint64_t seed) {
  if (d != 8 && d != 10) throw InputError("maximal Tjurina arrangement search supports d = 8 and d = 10");
  const int d1 = (d + 2) / 2;
  const long target = 3L * d1 * d1 - 9L * d1 + 3 - binom2(d);  // total excess over the pair count
  const auto x = HomogeneousPoly::variable(0);
  const auto y = HomogeneousPoly::variable(1);
  const auto z = HomogeneousPoly::variable(2);
  auto certified = [&](const LineArrangement& arr) {
    const auto comb = combinatorics(arr);
    long ex = 0;
    for (const auto& [m, k] : comb.n) ex += excess(m) * k;
    if (ex != target || comb.max_mult > d - d1) return false;
    const auto s = exponents(arr.product(), FieldMode::Prime);
    return s.m == 5 && std::all_of(s.exponents.begin(), s.exponents.end(), [&](int v) { return v == d1; });
  };
  if (d == 10) {
    // Complete quadrangle on (1:0:0), (0:1:0), (0:0:1), (1:1:1) plus one
    // seeded line through each vertex: four quadruple points.
    const std::vector<ProjectivePoint> vertices = {
        {Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(1), Rational(1)}};
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      CoefficientStream cs(rehash(seed, static_cast<std::uint64_t>(attempt)));
      std::vector<HomogeneousPoly> lines = {x, y, z, x - y, y - z, x - z};
      for (const auto& v : vertices) lines.push_back(cs.line_through(v));
      try {
        LineArrangement arr(std::move(lines));
        if (combinatorics(arr).n == std::map<int, int>{{2, 21}, {4, 4}} && certified(arr)) return arr;
      } catch (const InputError&) {
      }
    }
  }
  constexpr int kSearch = 4000;
  for (int attempt = 0; attempt < kSearch; ++attempt) {
    CoefficientStream cs(rehash(seed, static_cast<std::uint64_t>(attempt)));
    // Four lines in general position; small coordinates keep the later
    // intersection points small.
    std::vector<HomogeneousPoly> lines = {x, y, z, x + y + z};
    bool ok = true;
    while (ok && static_cast<int>(lines.size()) < d) {
      const auto comb = combinatorics(LineArrangement(lines));
      std::vector<ProjectivePoint> doubles;
      for (const auto& p : comb.points)
        if (p.multiplicity() == 2) doubles.push_back(p.point);
      std::vector<std::array<Rational, 3>> candidates;
      for (std::size_t a = 0; a < doubles.size(); ++a)
        for (std::size_t b = a + 1; b < doubles.size(); ++b) {
          const auto c = cross(doubles[a], doubles[b]);
          if (!is_null(c)) candidates.push_back(c);
        }
      std::vector<HomogeneousPoly> next = lines;
      const auto r = static_cast<unsigned>(cs.next() + 97);
      if (candidates.empty() || r % 3 == 0) next.push_back(cs.line_through(doubles[r % doubles.size()]));
      else next.push_back(linear_form(candidates[r % candidates.size()]));
      try {
        LineArrangement arr(next);
        lines = std::move(next);
      } catch (const InputError&) {
        ok = false;
      }
    }
    if (!ok) continue;
    const LineArrangement arr(lines);
    if (certified(arr)) return arr;
  }
  throw ConsistencyError("no maximal Tjurina arrangement found by the search");
}

}  // namespace jsyz
