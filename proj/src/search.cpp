#include "jsyz/search.hpp"

#include <algorithm>
#include <exception>
#include <random>

#include "jsyz/arrangements.hpp"
#include "jsyz/errors.hpp"
#include "jsyz/invariants.hpp"

namespace jsyz {

HomogeneousPoly search_sample(const SearchParams& p, int i) {
  std::mt19937_64 rng(rehash(p.seed, static_cast<std::uint64_t>(i)));
  const MonomialBasis basis(p.d);
  const int dim = static_cast<int>(basis.size());
  const int lo = std::clamp(p.min_terms, 1, dim);
  const int hi = std::clamp(p.max_terms, lo, dim);
  const int terms = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  // Partial Fisher-Yates driven by rng() directly, so the sample does not
  // depend on the standard library's distribution implementations.
  for (int k = 0; k < terms; ++k) {
    const auto j = static_cast<std::size_t>(k) + rng() % (idx.size() - static_cast<std::size_t>(k));
    std::swap(idx[static_cast<std::size_t>(k)], idx[j]);
  }
  const auto b = static_cast<std::uint64_t>(std::max(1, p.coeff_bound));
  HomogeneousPoly f(p.d);
  for (int k = 0; k < terms; ++k) {
    long c = static_cast<long>(rng() % (2 * b)) - static_cast<long>(b);
    if (c >= 0) ++c;  // skip zero
    f = f + HomogeneousPoly::monomial(basis[idx[static_cast<std::size_t>(k)]], Rational(c));
  }
  return f;
}

SearchResult run_search(const SearchParams& p) {
  if (p.d < 3) throw InputError("search needs degree at least 3");
  if (p.samples < 0) throw InputError("sample count must be non-negative");
  struct Outcome {
    bool skipped = true;
    std::vector<int> exps;
    long tau = 0;
    std::string poly;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(p.samples));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, p.jobs))
  for (int i = 0; i < p.samples; ++i) {
    auto& o = outcomes[static_cast<std::size_t>(i)];
    try {
      const auto f = search_sample(p, i).primitive();
      o.tau = tjurina(f, p.field);
      o.exps = exponents(f, p.field).exponents;
      o.poly = f.to_string();
      o.skipped = false;
    } catch (const InputError&) {
    } catch (...) {
#pragma omp critical(jsyz_search_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SearchResult r;
  r.samples = p.samples;
  for (int i = 0; i < p.samples; ++i) {
    const auto& o = outcomes[static_cast<std::size_t>(i)];
    if (o.skipped) {
      ++r.skipped;
      continue;
    }
    ++r.histogram[o.exps];
    if (o.exps == p.target) r.hits.push_back({i, o.poly, o.tau});
  }
  return r;
}

}  // namespace jsyz
