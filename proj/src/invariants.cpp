#include "jsyz/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "jsyz/errors.hpp"

namespace jsyz {

namespace {

long dimS(int k) { return static_cast<long>(dim_S(k)); }

long chi(long i) { return (i + 1) * (i + 2) / 2; }

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string tuple_string(const std::vector<long>& v) {
  std::vector<int> w(v.begin(), v.end());
  return tuple_string(w);
}

template <class T>
long hilbert_direct(const std::array<HomogeneousPoly, 3>& partials, int d, int k) {
  if (k < d - 1) return dimS(k);
  return dimS(k) - static_cast<long>(rank(jacobian_map<T>(partials, k - d + 1)));
}

// Annihilator of (I : m)_k inside S_k^*, given the annihilator of I_{k+1}.
template <class T>
std::vector<std::vector<T>> colon_annihilator(const std::vector<std::vector<T>>& next, int k) {
  const MonomialBasis basis(k);
  const std::size_t n = basis.size();
  std::array<std::vector<std::size_t>, 3> shift;
  for (int v = 0; v < 3; ++v) {
    shift[v].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m = basis[j];
      (v == 0 ? m.a : v == 1 ? m.b : m.c) += 1;
      shift[v][j] = monomial_index(m);
    }
  }
  if (next.empty()) return {};
  DenseMatrix<T> rows(3 * next.size(), n);
  for (std::size_t l = 0; l < next.size(); ++l)
    for (int v = 0; v < 3; ++v)
      for (std::size_t j = 0; j < n; ++j) rows(3 * l + v, j) = next[l][shift[v][j]];
  const RrefResult<T> r = rref(rows);
  std::vector<std::vector<T>> out;
  out.reserve(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) {
    auto row = r.reduced.row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

template <class T>
std::vector<std::vector<T>> jacobian_annihilator(const std::array<HomogeneousPoly, 3>& partials, int d, int k) {
  if (k < d - 1) {
    // J_k = 0: the whole dual space.
    std::vector<std::vector<T>> out(dim_S(k), std::vector<T>(dim_S(k)));
    for (std::size_t i = 0; i < out.size(); ++i) out[i][i] = T(1);
    return out;
  }
  return kernel_basis(jacobian_map<T>(partials, k - d + 1).transpose());
}

template <class T>
std::vector<long> saturation_sweep(const HomogeneousPoly& f) {
  const int d = f.degree();
  const auto partials = jacobian(f);
  const int top = 3 * d + 1;
  std::vector<long> c(static_cast<std::size_t>(top) + 1);

  auto ann = jacobian_annihilator<T>(partials, d, top);
  c[static_cast<std::size_t>(top)] = static_cast<long>(ann.size());

  const auto above = jacobian_annihilator<T>(partials, d, top + 1);
  if (colon_annihilator(above, top).size() != ann.size())
    throw ConsistencyError("Jacobian ideal is not saturated in degree " + std::to_string(top));

  for (int k = top - 1; k >= 0; --k) {
    ann = colon_annihilator(ann, k);
    c[static_cast<std::size_t>(k)] = static_cast<long>(ann.size());
  }
  c.pop_back();
  return c;
}

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string subtype_name(Subtype s, int type_t) {
  switch (s) {
    case Subtype::Free: return "Free";
    case Subtype::PlusOne: return "PlusOne";
    case Subtype::TwoA: return "2A";
    case Subtype::TwoB: return "2B";
    case Subtype::ThreeA: return "3A";
    case Subtype::ThreeB: return "3B";
    case Subtype::ThreeBPrime: return "3B'";
    case Subtype::ThreeC: return "3C";
    case Subtype::Other: break;
  }
  return "Other(" + std::to_string(type_t) + ")";
}

DpwBounds dpw_bounds(int d, int d1) {
  if (d1 < 0 || d1 > d - 1) throw InputError("first exponent out of range");
  DpwBounds b;
  b.tau_min = static_cast<long>(d - 1) * (d - d1 - 1);
  b.tau_max = static_cast<long>(d - 1) * (d - 1) - static_cast<long>(d1) * (d - d1 - 1);
  if (2 * d1 >= d) {
    const long n = 2L * d1 + 2 - d;
    b.tau_max_strong = b.tau_max - n * (n - 1) / 2;
  }
  return b;
}

bool CurveReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool CurveReport::consistency_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.pass && c.consistency; });
}

long hilbert_M(const HomogeneousPoly& f, int k, FieldMode mode) {
  if (f.degree() < 3) throw InputError("degree must be at least 3");
  if (k < 0) return 0;
  const auto partials = jacobian(f);
  return mode == FieldMode::Prime ? hilbert_direct<Residue>(partials, f.degree(), k)
                                  : hilbert_direct<Rational>(partials, f.degree(), k);
}

long tjurina(const HomogeneousPoly& f, FieldMode mode) {
  const int d = f.degree();
  if (d < 3) throw InputError("degree must be at least 3");
  const auto partials = jacobian(f);
  std::vector<long> window;
  for (int k = 3 * d - 5; k <= 3 * d; ++k)
    window.push_back(mode == FieldMode::Prime ? hilbert_direct<Residue>(partials, d, k)
                                              : hilbert_direct<Rational>(partials, d, k));
  if (std::adjacent_find(window.begin(), window.end(), std::not_equal_to<>()) != window.end())
    throw InputError("curve not reduced or singular locus not finite");
  return window.back();
}

std::vector<long> saturation_dims(const HomogeneousPoly& f, FieldMode mode) {
  if (f.degree() < 3) throw InputError("degree must be at least 3");
  return mode == FieldMode::Prime ? saturation_sweep<Residue>(f) : saturation_sweep<Rational>(f);
}

FreenessDefect freeness_defect(const std::vector<long>& hilbert, const std::vector<long>& saturation) {
  if (hilbert.size() != saturation.size()) throw InputError("tables of different lengths");
  FreenessDefect fd;
  for (std::size_t k = 0; k < hilbert.size(); ++k) {
    const long n = hilbert[k] - saturation[k];
    if (n < 0) throw ConsistencyError("saturation larger than the Jacobian ideal's quotient");
    fd.n_table.push_back(n);
    fd.nu = std::max(fd.nu, n);
  }
  return fd;
}

long nu_from_mdr(int d, int d1, long tau) {
  const long e = d - 1;
  if (2L * d1 <= e) return e * e - d1 * (e - d1) - tau;
  return (3 * e * e + 3) / 4 - tau;
}

std::vector<long> n_table_from_syzygies(int d, const std::vector<std::size_t>& d0_dims, long tau) {
  auto a = [&](long i) -> long {
    if (i < 0) return 0;
    if (i >= static_cast<long>(d0_dims.size())) throw InputError("syzygy table too short");
    return static_cast<long>(d0_dims[static_cast<std::size_t>(i)]);
  };
  std::vector<long> n;
  for (long j = 0; j <= 3L * d; ++j) {
    const long k = j - d + 1;
    n.push_back(a(k) + a(d - 4 - k) - 3 * chi(k) + chi(k + d - 1) - tau);
  }
  return n;
}

int type_of(const SyzygySummary& s) { return s.exponents[0] + s.exponents[1] + 1 - s.d; }

Subtype classify(const SyzygySummary& s) {
  const int t = type_of(s);
  switch (t) {
    case 0: return Subtype::Free;
    case 1: return Subtype::PlusOne;
    case 2: return s.m == 3 ? Subtype::TwoA : s.m == 4 ? Subtype::TwoB : Subtype::Other;
    case 3: break;
    default: return Subtype::Other;
  }
  const auto& e = s.epsilons;
  if (s.m == 3 && e == std::vector<int>{3}) return Subtype::ThreeA;
  if (s.m == 4 && e == std::vector<int>{2, 1}) return Subtype::ThreeB;
  if (s.m == 4 && e == std::vector<int>{1, 2}) return Subtype::ThreeBPrime;
  if (s.m == 5 && e == std::vector<int>{1, 1, 1}) return Subtype::ThreeC;
  throw ConsistencyError("type 3 with m = " + std::to_string(s.m) + " and epsilons " + tuple_string(e) +
                         " matches no subtype");
}

std::optional<long> type3_tau(const SyzygySummary& s, Subtype sub) {
  const auto& x = s.exponents;
  auto d = [&](int i) { return static_cast<long>(x[static_cast<std::size_t>(i - 1)]); };
  const long base = d(1) * d(1) + d(1) * d(2) + d(2) * d(2);
  switch (sub) {
    case Subtype::ThreeA: return base - 3 * (d(1) + d(2) + d(3));
    case Subtype::ThreeB: return base - 3 * d(1) - 3 * d(2) - 2 * d(3) - d(4) + 2;
    case Subtype::ThreeBPrime: return base - 3 * d(1) - 3 * d(2) - d(3) - 2 * d(4) + 2;
    case Subtype::ThreeC: return base - 3 * d(1) - 3 * d(2) - d(3) - d(4) - d(5) + 3;
    default: return std::nullopt;
  }
}

std::optional<NuFormula> type3_nu(const SyzygySummary& s, Subtype sub) {
  const auto& x = s.exponents;
  auto d = [&](int i) { return static_cast<long>(x[static_cast<std::size_t>(i - 1)]); };
  const long gap = d(2) - d(1);
  const int branch = gap >= 2 ? 0 : gap == 1 ? 1 : 2;
  long head = 0;
  long c0 = 0;
  switch (sub) {
    case Subtype::ThreeA: head = 3 * (d(3) - d(2)); c0 = 9; break;
    case Subtype::ThreeB: head = 2 * d(3) + d(4) - 3 * d(2); c0 = 7; break;
    case Subtype::ThreeBPrime: head = d(3) + 2 * d(4) - 3 * d(2); c0 = 7; break;
    case Subtype::ThreeC: head = d(3) + d(4) + d(5) - 3 * d(2); c0 = 6; break;
    default: return std::nullopt;
  }
  const long c = c0 - branch;
  return NuFormula{head + c, c};
}

EquivalenceTest minimal_tjurina_test(const CurveReport& r) {
  const auto& e = r.syzygy.exponents;
  EquivalenceTest t;
  t.left = r.tau == dpw_bounds(r.d, e[0]).tau_min;
  t.right = r.syzygy.m == 3 && e[1] == r.d - 1 && e[2] == r.d - 1;
  return t;
}

bool is_maximal_tjurina(const CurveReport& r) {
  const auto b = dpw_bounds(r.d, r.syzygy.exponents[0]);
  return b.tau_max_strong && r.tau == *b.tau_max_strong;
}

std::optional<EquivalenceTest> maximal_tjurina_test(const CurveReport& r) {
  const auto& e = r.syzygy.exponents;
  if (2 * e[0] < r.d) return std::nullopt;
  EquivalenceTest t;
  t.left = is_maximal_tjurina(r) && 2 * e[0] == r.d + 2;
  t.right = r.subtype == Subtype::ThreeC && e.size() == 5 &&
            std::all_of(e.begin(), e.end(), [&](int v) { return v == e[0]; });
  return t;
}

CurveReport analyze(const HomogeneousPoly& input, const AnalysisOptions& opt, std::string name) {
  const HomogeneousPoly f = input.primitive();
  const int d = f.degree();
  if (d < 3) throw InputError("degree " + std::to_string(d) + " < 3 is not supported");

  CurveReport r;
  r.name = std::move(name);
  r.d = d;
  r.field = opt.field;
  Stopwatch clock;
  Stopwatch total;

  const long tau_direct = tjurina(f, opt.field);
  r.timings_ms["reducedness_gate"] = clock.lap_ms();

  r.syzygy = exponents(f, opt.field);
  r.timings_ms["generators"] = clock.lap_ms();
  r.syzygy = relation_degrees(f, std::move(r.syzygy), opt.field);
  r.timings_ms["relations"] = clock.lap_ms();

  const auto& s = r.syzygy;
  const auto& e = s.exponents;
  auto a = [&](int i) { return i < 0 ? 0L : static_cast<long>(s.d0_dims[static_cast<std::size_t>(i)]); };
  for (int k = 0; k <= 3 * d; ++k) r.hilbert_M.push_back(dimS(k) - 3 * dimS(k - d + 1) + a(k - d + 1));
  r.tau = r.hilbert_M.back();
  if (r.tau != tau_direct)
    throw ConsistencyError("Tjurina number differs between the direct and the syzygy route");

  const auto sat = saturation_dims(f, opt.field);
  r.timings_ms["saturation"] = clock.lap_ms();
  const auto fd = freeness_defect(r.hilbert_M, sat);
  r.n_table = fd.n_table;
  r.nu = fd.nu;
  r.type_t = type_of(s);
  r.subtype = classify(s);
  if (!s.is_free) r.second_syzygy = second_syzygy_degree_table(s);

  auto add = [&](std::string cname, std::string expected, std::string actual, bool pass, bool consistency = false) {
    r.checks.push_back({std::move(cname), std::move(expected), std::move(actual), pass, consistency});
  };
  auto add_eq = [&](std::string cname, long expected, long actual, bool consistency = false) {
    add(std::move(cname), std::to_string(expected), std::to_string(actual), expected == actual, consistency);
  };

  {
    std::vector<long> window(r.hilbert_M.end() - 6, r.hilbert_M.end());
    const bool flat = std::all_of(window.begin(), window.end(), [&](long v) { return v == r.tau; });
    add("hilbert_stabilization", "constant " + std::to_string(r.tau), tuple_string(window), flat);
  }
  {
    bool ok = true;
    for (int k = 0; k < d - 1; ++k) ok = ok && r.hilbert_M[static_cast<std::size_t>(k)] == dimS(k);
    add("low_degree_hilbert", "dim S_k for k < d-1", ok ? "dim S_k" : "differs", ok);
  }
  {
    const bool ok = e[0] <= e[1] && e[1] <= d - 1 && (s.m < 3 || (e[1] <= e[2] && e[2] <= d - 1));
    add("exponent_chain_bound", s.m < 3 ? "d1 <= d2 <= d-1" : "d1 <= d2 <= d3 <= d-1", tuple_string(e), ok);
  }
  {
    // Alternating dimension count of the resolution against the certified table.
    bool ok = true;
    for (int rho = 0; rho < static_cast<int>(s.d0_dims.size()); ++rho) {
      long v = 0;
      for (int dj : e) v += dimS(rho - dj);
      for (int ri : s.relation_degrees) v -= dimS(rho - ri);
      ok = ok && v == a(rho);
    }
    add("resolution_exactness", "sum dim S(rho-d_j) - sum dim S(rho-r_i) = dim D0_rho", ok ? "holds" : "fails", ok);
  }
  {
    const int k = 4 * d;
    long v = dimS(k) - 3 * dimS(k - d + 1);
    for (int dj : e) v += dimS(k - d + 1 - dj);
    for (int ri : s.relation_degrees) v -= dimS(k - d + 1 - ri);
    add_eq("tau_from_resolution", r.tau, v);
  }
  if (!s.is_free) {
    const int sum_eps = std::accumulate(s.epsilons.begin(), s.epsilons.end(), 0);
    add_eq("epsilon_sum_identity", d - 1 + sum_eps, e[0] + e[1]);
    add_eq("regularity_identity", e.back() + s.epsilons.back() - 1, s.regularity);
    if (r.tau > 0) {
      const bool ok = e.back() <= s.regularity + 1 && s.regularity + 1 <= 2 * d - 3;
      add("regularity_bound", "d_m <= reg+1 <= " + std::to_string(2 * d - 3),
          "d_m=" + std::to_string(e.back()) + " reg=" + std::to_string(s.regularity), ok);
    } else {
      add_eq("regularity_smooth", 2 * d - 3, s.regularity);
    }
  }
  add_eq("nu_saturation_vs_mdr_formula", nu_from_mdr(d, e[0], r.tau), r.nu);
  {
    const auto dual = n_table_from_syzygies(d, s.d0_dims, r.tau);
    add("n_table_duality_route", tuple_string(dual), tuple_string(r.n_table), dual == r.n_table);
  }
  {
    const bool free_by_nu = r.nu == 0;
    const bool ok = free_by_nu == s.is_free && s.is_free == (r.type_t == 0);
    add("free_detection", "nu = 0 <=> m = 2 <=> t = 0",
        "nu=" + std::to_string(r.nu) + " m=" + std::to_string(s.m) + " t=" + std::to_string(r.type_t), ok, true);
  }
  {
    const auto b = dpw_bounds(d, e[0]);
    add("dpw_lower_bound", ">= " + std::to_string(b.tau_min), std::to_string(r.tau), r.tau >= b.tau_min);
    add("dpw_upper_bound", "<= " + std::to_string(b.tau_max), std::to_string(r.tau), r.tau <= b.tau_max);
    if (b.tau_max_strong)
      add("dpw_strong_upper_bound", "<= " + std::to_string(*b.tau_max_strong), std::to_string(r.tau),
          r.tau <= *b.tau_max_strong);
  }
  {
    const auto t = minimal_tjurina_test(r);
    add("minimal_tjurina_equivalence", std::string("tau = tau_min: ") + (t.left ? "yes" : "no"),
        std::string("m = 3, d2 = d3 = d-1: ") + (t.right ? "yes" : "no"), t.agrees(), true);
  }
  if (const auto t = maximal_tjurina_test(r)) {
    add("maximal_tjurina_equivalence", std::string("maximal with 2 d1 = d+2: ") + (t->left ? "yes" : "no"),
        std::string("3C with equal exponents: ") + (t->right ? "yes" : "no"), t->agrees(), true);
    if (is_maximal_tjurina(r)) {
      const bool shape = s.m == 2 * e[0] - d + 3 &&
                         std::all_of(e.begin(), e.end(), [&](int v) { return v == e[0]; });
      add("maximal_tjurina_shape", "m = 2 d1 - d + 3, equal exponents", tuple_string(e), shape);
    }
  }
  if (const auto tau3 = type3_tau(s, r.subtype)) {
    add_eq("type3_tau_formula", *tau3, r.tau);
    const auto nu3 = type3_nu(s, r.subtype);
    add_eq("type3_nu_formula", nu3->value, r.nu);
    add("type3_nu_lower_bound", ">= " + std::to_string(nu3->lower_bound), std::to_string(r.nu),
        r.nu >= nu3->lower_bound);
    if (r.subtype == Subtype::ThreeB)
      add("exponent_gap_3B", "d3 < d4", tuple_string(e), e[2] < e[3]);
  }
  if (r.second_syzygy)
    for (const auto& c : r.second_syzygy->bound_checks) r.checks.push_back(c);

  r.timings_ms["checks"] = clock.lap_ms();
  r.timings_ms["total"] = total.lap_ms();
  return r;
}

}  // namespace jsyz
