#include "jsyz/syzygy_engine.hpp"

#include <algorithm>
#include <string>

#include "jsyz/errors.hpp"

namespace jsyz {

namespace {

template <class T>
std::size_t nullity(const std::array<HomogeneousPoly, 3>& partials, int k) {
  if (k < 0) return 0;
  const DenseMatrix<T> m = jacobian_map<T>(partials, k);
  return m.cols() - rank(m);
}

template <class T>
std::vector<std::size_t> nullities(const std::array<HomogeneousPoly, 3>& partials, int kmax) {
  std::vector<std::size_t> out(static_cast<std::size_t>(kmax) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k <= kmax; ++k) out[static_cast<std::size_t>(k)] = nullity<T>(partials, k);
  return out;
}

template <class T>
std::vector<std::vector<T>> multiples_of(const std::vector<SyzygyVector>& gens, int k) {
  std::vector<std::vector<T>> rows;
  for (const auto& g : gens) {
    auto part = shifted_multiples<T>(g, k);
    for (auto& v : part) rows.push_back(std::move(v));
  }
  return rows;
}

template <class T>
std::size_t rank_of_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(DenseMatrix<T>::from_rows(rows, cols));
}

// Picks `count` rational kernel vectors of the degree-k map, in free-variable
// order, that are independent modulo the multiples of earlier generators.
std::vector<SyzygyVector> pick_generators(const std::array<HomogeneousPoly, 3>& partials, int k,
                                          const std::vector<SyzygyVector>& earlier, std::size_t count) {
  const std::size_t len = 3 * dim_S(k);
  SpanBuilder<Rational> span(len);
  for (const auto& v : multiples_of<Rational>(earlier, k)) span.insert(v);
  const auto kernel = kernel_basis(jacobian_map<Rational>(partials, k));
  std::vector<SyzygyVector> picks;
  for (const auto& v : kernel) {
    if (picks.size() == count) break;
    if (!span.insert(v)) continue;
    const auto ints = primitive_integer_vector(v);
    std::vector<Rational> q(ints.begin(), ints.end());
    picks.push_back(SyzygyVector::from_vector(partials, k, q));
  }
  if (picks.size() != count)
    throw ConsistencyError("degree " + std::to_string(k) + ": expected " + std::to_string(count) +
                           " new generators, found " + std::to_string(picks.size()) +
                           " over the rationals");
  return picks;
}

template <class T>
SyzygySummary scan_generators(const HomogeneousPoly& f) {
  SyzygySummary s;
  s.d = f.degree();
  const int d = s.d;
  const auto partials = jacobian(f);
  const int kdims = 2 * d + 1;
  const auto dims = nullities<T>(partials, kdims);

  for (int k = 0; k <= 2 * d - 4; ++k) {
    const std::size_t len = 3 * dim_S(k);
    const std::size_t lower = rank_of_rows(multiples_of<T>(s.generators, k), len);
    const std::size_t dim = dims[static_cast<std::size_t>(k)];
    if (lower > dim) throw ConsistencyError("multiples exceed the syzygy space in degree " + std::to_string(k));
    if (lower == dim) continue;
    for (auto& g : pick_generators(partials, k, s.generators, dim - lower)) {
      s.generators.push_back(std::move(g));
      s.exponents.push_back(k);
    }
  }

  for (int k = 0; k <= kdims; ++k) {
    const std::size_t spanned = rank_of_rows(multiples_of<T>(s.generators, k), 3 * dim_S(k));
    if (spanned != dims[static_cast<std::size_t>(k)])
      throw ConsistencyError("generators span " + std::to_string(spanned) + " of " +
                             std::to_string(dims[static_cast<std::size_t>(k)]) +
                             " syzygy dimensions in degree " + std::to_string(k));
  }
  s.d0_dims = dims;
  s.m = static_cast<int>(s.exponents.size());
  if (s.m < 2) throw ConsistencyError("fewer than two generators found");
  s.is_free = s.m == 2 && s.exponents[0] + s.exponents[1] == d - 1;
  return s;
}

// Relation vectors are indexed by (generator j, monomial of degree rho - d_j)
// in generator order.
std::vector<std::size_t> block_offsets(const std::vector<int>& exps, int rho) {
  std::vector<std::size_t> off{0};
  for (int e : exps) off.push_back(off.back() + dim_S(rho - e));
  return off;
}

template <class T>
std::vector<int> nakayama_relations(const SyzygySummary& s, int rho_max) {
  const auto& exps = s.exponents;
  const std::size_t want = static_cast<std::size_t>(s.m - 2);
  std::vector<int> found;
  std::vector<std::vector<T>> prev;  // relation space one degree lower
  for (int rho = exps.front(); rho <= rho_max && found.size() < want; ++rho) {
    const auto off = block_offsets(exps, rho);
    const auto rows = multiples_of<T>(s.generators, rho);
    std::vector<std::vector<T>> rel;
    if (!rows.empty())
      rel = kernel_basis(DenseMatrix<T>::from_rows(rows, 3 * dim_S(rho)).transpose());

    std::vector<std::vector<T>> shifts;
    if (!prev.empty()) {
      const auto poff = block_offsets(exps, rho - 1);
      for (const auto& r : prev)
        for (int v = 0; v < 3; ++v) {
          std::vector<T> w(off.back());
          for (std::size_t j = 0; j < exps.size(); ++j) {
            const MonomialBasis basis(rho - 1 - exps[j]);
            for (std::size_t i = 0; i < basis.size(); ++i) {
              const T& c = r[poff[j] + i];
              if (is_zero(c)) continue;
              Monomial mu = basis[i];
              (v == 0 ? mu.a : v == 1 ? mu.b : mu.c) += 1;
              w[off[j] + monomial_index(mu)] = c;
            }
          }
          shifts.push_back(std::move(w));
        }
    }
    const std::size_t old = rank_of_rows(shifts, off.back());
    if (old > rel.size()) throw ConsistencyError("relation shifts exceed the relation space");
    for (std::size_t n = old; n < rel.size(); ++n) found.push_back(rho);
    prev = std::move(rel);
  }
  return found;
}

}  // namespace

std::size_t d0_dimension(const HomogeneousPoly& f, int k, FieldMode mode) {
  if (f.degree() < 1) throw InputError("degree must be positive");
  const auto partials = jacobian(f);
  return mode == FieldMode::Prime ? nullity<Residue>(partials, k) : nullity<Rational>(partials, k);
}

SyzygySummary exponents(const HomogeneousPoly& f, FieldMode mode) {
  if (f.degree() < 3) throw InputError("degree " + std::to_string(f.degree()) + " < 3 is not supported");
  return mode == FieldMode::Prime ? scan_generators<Residue>(f) : scan_generators<Rational>(f);
}

SyzygySummary relation_degrees(const HomogeneousPoly& f, SyzygySummary s, FieldMode mode) {
  (void)f;
  s.relation_degrees.clear();
  s.epsilons.clear();
  if (s.is_free) {
    s.regularity = s.exponents.back();
    return s;
  }
  const int d = s.d;
  // Smooth curves need one degree beyond 2d-3.
  const int rho_max = 2 * d - 2;
  s.relation_degrees = mode == FieldMode::Prime ? nakayama_relations<Residue>(s, rho_max)
                                                : nakayama_relations<Rational>(s, rho_max);
  if (s.relation_degrees.size() != static_cast<std::size_t>(s.m - 2))
    throw ConsistencyError("found " + std::to_string(s.relation_degrees.size()) +
                           " minimal relations, expected " + std::to_string(s.m - 2));

  // The relation module is free, so its Hilbert function determines the
  // degrees; dimensions come from the certified syzygy table.
  std::vector<int> from_hilbert;
  for (int rho = 0; rho < static_cast<int>(s.d0_dims.size()); ++rho) {
    long long dim_r = -static_cast<long long>(s.d0_dims[static_cast<std::size_t>(rho)]);
    for (int e : s.exponents) dim_r += static_cast<long long>(dim_S(rho - e));
    for (int r : from_hilbert) dim_r -= static_cast<long long>(dim_S(rho - r));
    if (dim_r < 0) throw ConsistencyError("negative relation count in degree " + std::to_string(rho));
    for (long long n = 0; n < dim_r; ++n) from_hilbert.push_back(rho);
  }
  if (from_hilbert != s.relation_degrees)
    throw ConsistencyError("relation degrees from Nakayama and from the Hilbert function differ");

  for (int j = 0; j < s.m - 2; ++j) {
    const int eps = s.relation_degrees[static_cast<std::size_t>(j)] - s.exponents[static_cast<std::size_t>(j) + 2];
    if (eps < 1) throw ConsistencyError("epsilon_" + std::to_string(j + 1) + " = " + std::to_string(eps) + " < 1");
    s.epsilons.push_back(eps);
  }
  s.regularity = std::max(s.exponents.back(), s.relation_degrees.back() - 1);
  return s;
}

SecondSyzygyDegreeTable second_syzygy_degree_table(const SyzygySummary& s) {
  if (s.is_free) throw InputError("a free curve has no relations among its generators");
  SecondSyzygyDegreeTable t;
  const int dm = s.exponents.back();
  for (std::size_t i = 0; i < s.relation_degrees.size(); ++i) {
    std::vector<std::optional<int>> row;
    std::vector<int> stated;
    for (int dj : s.exponents) {
      const int deg = s.relation_degrees[i] - dj;
      row.push_back(deg >= 0 ? std::optional<int>(deg) : std::nullopt);
      stated.push_back(dm - dj + s.epsilons[i]);
      if (deg >= 0 && deg != stated.back()) t.formula_agrees = false;
    }
    t.degree.push_back(std::move(row));
    t.shifted_formula.push_back(std::move(stated));
  }
  const bool type3a = s.m == 3 && s.exponents[0] + s.exponents[1] + 1 - s.d == 3 && s.epsilons[0] == 3;
  if (type3a) {
    const int a11 = s.relation_degrees[0] - s.exponents[0];
    const int a12 = s.relation_degrees[0] - s.exponents[1];
    const int a13 = s.relation_degrees[0] - s.exponents[2];
    t.bound_checks.push_back({"second_syzygy_degree_1_at_most_d_minus_1", "<= " + std::to_string(s.d - 1),
                              std::to_string(a11), a11 <= s.d - 1});
    t.bound_checks.push_back({"second_syzygy_degree_2_at_most_half_d_plus_1",
                              "<= " + Rational(s.d + 2, 2).get_str(), std::to_string(a12),
                              2 * a12 <= s.d + 2});
    t.bound_checks.push_back({"second_syzygy_degree_3_equals_3", "3", std::to_string(a13), a13 == 3});
  }
  return t;
}

}  // namespace jsyz
