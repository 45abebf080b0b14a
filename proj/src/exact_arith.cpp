#include "jsyz/exact_arith.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

#include "jsyz/errors.hpp"

namespace jsyz {

// ---------------------------------------------------------------- Residue

Residue Residue::from_int64(std::int64_t v) {
  std::int64_t m = v % static_cast<std::int64_t>(kPrime);
  if (m < 0) m += kPrime;
  return from_canonical(static_cast<std::uint32_t>(m));
}

Residue Residue::from_integer(const Integer& v) {
  const unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), kPrime);
  return from_canonical(static_cast<std::uint32_t>(r));
}

Residue Residue::from_rational(const Rational& v) {
  const Residue den = from_integer(v.get_den());
  if (den.is_zero()) throw InputError("denominator divisible by the working prime 2^31-1");
  return from_integer(v.get_num()) * den.inverse();
}

Residue Residue::inverse() const {
  // Fermat: a^(p-2)
  Residue base = *this;
  Residue acc = from_canonical(1);
  std::uint32_t e = kPrime - 2;
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string to_string(const Residue& r) { return std::to_string(r.value()); }
std::string to_string(const Rational& q) { return q.get_str(); }

template <class T>
DenseMatrix<T> DenseMatrix<T>::from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
  DenseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

namespace {

// ------------------------------------------------ prime-field dense kernels

template <bool Reduce>
RrefResult<Residue> eliminate_mod_p(const DenseMatrix<Residue>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).value();

  RrefResult<Residue> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols, a.begin() + r * cols);

    std::uint32_t* prow = a.data() + r * cols;
    const Residue inv = Residue::from_canonical(prow[c]).inverse();
    for (std::size_t j = c; j < cols; ++j)
      prow[j] = (Residue::from_canonical(prow[j]) * inv).value();

    const std::size_t first = Reduce ? 0 : r + 1;
    const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (rows * (cols - c) > 32768)
    for (std::int64_t ii = static_cast<std::int64_t>(first); ii < n; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r) continue;
      std::uint32_t* row = a.data() + i * cols;
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = kPrime - f;
      for (std::size_t j = c; j < cols; ++j)
        row[j] = Residue::reduce(row[j] + neg * prow[j]);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  if constexpr (Reduce) {
    out.reduced = DenseMatrix<Residue>(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        out.reduced(i, j) = Residue::from_canonical(a[i * cols + j]);
  }
  return out;
}

// ------------------------------------------ fraction-free integer kernels

// Sparse primitive integer row. Columns strictly increasing, no zero values.
struct IntRow {
  std::vector<std::uint32_t> idx;
  std::vector<Integer> val;

  bool empty() const { return idx.empty(); }
  std::uint32_t lead() const { return idx.front(); }
  const Integer* at(std::uint32_t c) const {
    auto it = std::lower_bound(idx.begin(), idx.end(), c);
    if (it == idx.end() || *it != c) return nullptr;
    return &val[static_cast<std::size_t>(it - idx.begin())];
  }
};

void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& v : r.val) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(r.val.front()) < 0) g = -g;
  if (g != 1)
    for (auto& v : r.val) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r := a*r - b*p, then primitive.
void combine(IntRow& r, const Integer& a, const IntRow& p, const Integer& b) {
  IntRow out;
  out.idx.reserve(r.idx.size() + p.idx.size());
  out.val.reserve(r.idx.size() + p.idx.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < r.idx.size() || j < p.idx.size()) {
    if (j == p.idx.size() || (i < r.idx.size() && r.idx[i] < p.idx[j])) {
      out.idx.push_back(r.idx[i]);
      out.val.emplace_back(r.val[i] * a);
      ++i;
    } else if (i == r.idx.size() || p.idx[j] < r.idx[i]) {
      out.idx.push_back(p.idx[j]);
      t = p.val[j] * b;
      out.val.emplace_back(-t);
      ++j;
    } else {
      t = r.val[i] * a;
      mpz_submul(t.get_mpz_t(), p.val[j].get_mpz_t(), b.get_mpz_t());
      if (sgn(t) != 0) {
        out.idx.push_back(r.idx[i]);
        out.val.push_back(t);
      }
      ++i;
      ++j;
    }
  }
  r = std::move(out);
  make_primitive(r);
}

// Clears the entry of `r` at column `c` using pivot row `p` whose entry at c
// is `pv`.
void eliminate_at(IntRow& r, const Integer& rv, const IntRow& p, const Integer& pv) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), rv.get_mpz_t(), pv.get_mpz_t());
  Integer a = pv / g;
  Integer b = rv / g;
  combine(r, a, p, b);
}

IntRow to_int_row(std::span<const Rational> v) {
  IntRow r;
  Integer l = 1;
  for (const auto& q : v)
    if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    r.idx.push_back(static_cast<std::uint32_t>(j));
    Integer t = v[j].get_num() * (l / v[j].get_den());
    r.val.push_back(std::move(t));
  }
  make_primitive(r);
  return r;
}

struct Forward {
  std::vector<IntRow> rows;
  std::vector<std::pair<std::uint32_t, std::size_t>> pivots;  // (column, row index)
};

Forward forward_fraction_free(const DenseMatrix<Rational>& m) {
  Forward fw;
  fw.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) fw.rows.push_back(to_int_row(m.row(i)));

  std::vector<std::vector<std::size_t>> bucket(m.cols());
  for (std::size_t i = 0; i < fw.rows.size(); ++i)
    if (!fw.rows[i].empty()) bucket[fw.rows[i].lead()].push_back(i);

  for (std::uint32_t c = 0; c < m.cols(); ++c) {
    auto& b = bucket[c];
    if (b.empty()) continue;
    std::sort(b.begin(), b.end());
    const std::size_t p = b.front();
    const IntRow& prow = fw.rows[p];
    const auto others = static_cast<std::int64_t>(b.size());
#pragma omp parallel for schedule(dynamic) if (others > 2)
    for (std::int64_t t = 1; t < others; ++t) {
      IntRow& r = fw.rows[b[static_cast<std::size_t>(t)]];
      const Integer rv = r.val.front();
      eliminate_at(r, rv, prow, prow.val.front());
    }
    for (std::size_t t = 1; t < b.size(); ++t) {
      const IntRow& r = fw.rows[b[t]];
      if (!r.empty()) bucket[r.lead()].push_back(b[t]);
    }
    fw.pivots.emplace_back(c, p);
    std::vector<std::size_t>().swap(b);
  }
  return fw;
}

RrefResult<Rational> rref_fraction_free(const DenseMatrix<Rational>& m) {
  Forward fw = forward_fraction_free(m);
  const std::size_t r = fw.pivots.size();
  for (std::size_t t = r; t-- > 0;) {
    const auto [pc, pr] = fw.pivots[t];
    const IntRow& prow = fw.rows[pr];
    const Integer pv = prow.val.front();
#pragma omp parallel for schedule(dynamic) if (t > 2)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(t); ++s) {
      IntRow& row = fw.rows[fw.pivots[static_cast<std::size_t>(s)].second];
      const Integer* v = row.at(pc);
      if (v == nullptr) continue;
      const Integer rv = *v;
      eliminate_at(row, rv, prow, pv);
    }
  }
  RrefResult<Rational> out;
  out.rank = r;
  out.reduced = DenseMatrix<Rational>(m.rows(), m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const auto [pc, pr] = fw.pivots[i];
    const IntRow& row = fw.rows[pr];
    out.pivot_columns.push_back(pc);
    const Integer& lead = row.val.front();
    for (std::size_t k = 0; k < row.idx.size(); ++k) {
      Rational q(row.val[k], lead);
      q.canonicalize();
      out.reduced(i, row.idx[k]) = q;
    }
  }
  return out;
}

// ------------------------------------------------- textbook Gauss-Jordan

template <class T>
T inverse_of(const T& v) {
  if constexpr (std::is_same_v<T, Residue>) {
    return v.inverse();
  } else {
    return Rational(1) / v;
  }
}

template <class T>
RrefResult<T> textbook_rref(const DenseMatrix<T>& m) {
  DenseMatrix<T> a = m;
  RrefResult<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const T inv = inverse_of(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(a);
  return out;
}

}  // namespace

// ------------------------------------------------------- public kernels

template <>
RrefResult<Residue> rref(const DenseMatrix<Residue>& m) {
  return eliminate_mod_p<true>(m);
}
template <>
RrefResult<Rational> rref(const DenseMatrix<Rational>& m) {
  return rref_fraction_free(m);
}

template <>
std::size_t rank(const DenseMatrix<Residue>& m) {
  return eliminate_mod_p<false>(m).rank;
}
template <>
std::size_t rank(const DenseMatrix<Rational>& m) {
  return forward_fraction_free(m).pivots.size();
}

template <class T>
std::vector<std::vector<T>> kernel_basis(const RrefResult<T>& r) {
  const std::size_t cols = r.reduced.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols);
    v[f] = T(1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      const T& e = r.reduced(i, f);
      if (!is_zero(e)) v[r.pivot_columns[i]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::vector<std::vector<T>> kernel_basis(const DenseMatrix<T>& m) {
  return kernel_basis(rref(m));
}

template <class T>
std::size_t subspace_dim_sum(std::span<const std::vector<T>> a, std::span<const std::vector<T>> b) {
  std::size_t len = 0;
  bool have_len = false;
  for (auto part : {a, b})
    for (const auto& v : part) {
      if (have_len && v.size() != len) throw InputError("vectors of different lengths");
      len = v.size();
      have_len = true;
    }
  SpanBuilder<T> span(len);
  for (auto part : {a, b})
    for (const auto& v : part) span.insert(v);
  return span.dim();
}

namespace serial {
template <class T>
RrefResult<T> rref(const DenseMatrix<T>& m) {
  return textbook_rref(m);
}
template <class T>
std::size_t rank(const DenseMatrix<T>& m) {
  return textbook_rref(m).rank;
}
}  // namespace serial

// ---------------------------------------------------------- SpanBuilder

template <>
struct SpanBuilder<Residue>::Impl {
  std::unordered_map<std::size_t, std::vector<Residue>> rows;  // lead -> row with 1 at lead
};

template <>
struct SpanBuilder<Rational>::Impl {
  std::unordered_map<std::uint32_t, IntRow> rows;
};

template <class T>
SpanBuilder<T>::SpanBuilder(std::size_t length) : length_(length), impl_(new Impl) {}
template <class T>
SpanBuilder<T>::~SpanBuilder() {
  delete impl_;
}
template <class T>
SpanBuilder<T>::SpanBuilder(SpanBuilder&& o) noexcept : length_(o.length_), impl_(o.impl_) {
  o.impl_ = nullptr;
}
template <class T>
SpanBuilder<T>& SpanBuilder<T>::operator=(SpanBuilder&& o) noexcept {
  if (this != &o) {
    delete impl_;
    length_ = o.length_;
    impl_ = o.impl_;
    o.impl_ = nullptr;
  }
  return *this;
}
template <class T>
std::size_t SpanBuilder<T>::dim() const {
  return impl_->rows.size();
}

template <>
bool SpanBuilder<Residue>::insert(std::span<const Residue> v) {
  if (v.size() != length_) throw InputError("vector length does not match span");
  std::vector<Residue> w(v.begin(), v.end());
  std::size_t lead = 0;
  for (;;) {
    while (lead < w.size() && w[lead].is_zero()) ++lead;
    if (lead == w.size()) return false;
    auto it = impl_->rows.find(lead);
    if (it == impl_->rows.end()) break;
    const Residue f = w[lead];
    const auto& p = it->second;
    for (std::size_t j = lead; j < w.size(); ++j)
      if (!p[j].is_zero()) w[j] -= f * p[j];
  }
  const Residue inv = w[lead].inverse();
  for (std::size_t j = lead; j < w.size(); ++j) w[j] *= inv;
  impl_->rows.emplace(lead, std::move(w));
  return true;
}

template <>
bool SpanBuilder<Rational>::insert(std::span<const Rational> v) {
  if (v.size() != length_) throw InputError("vector length does not match span");
  IntRow r = to_int_row(v);
  while (!r.empty()) {
    auto it = impl_->rows.find(r.lead());
    if (it == impl_->rows.end()) {
      const std::uint32_t lead = r.lead();
      impl_->rows.emplace(lead, std::move(r));
      return true;
    }
    const Integer rv = r.val.front();
    eliminate_at(r, rv, it->second, it->second.val.front());
  }
  return false;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  IntRow r = to_int_row(v);
  std::vector<Integer> out(v.size());
  for (std::size_t k = 0; k < r.idx.size(); ++k) out[r.idx[k]] = r.val[k];
  return out;
}

// ------------------------------------------------- explicit instantiation

template class DenseMatrix<Residue>;
template class DenseMatrix<Rational>;
template class SpanBuilder<Residue>;
template class SpanBuilder<Rational>;

template std::vector<std::vector<Residue>> kernel_basis(const RrefResult<Residue>&);
template std::vector<std::vector<Rational>> kernel_basis(const RrefResult<Rational>&);
template std::vector<std::vector<Residue>> kernel_basis(const DenseMatrix<Residue>&);
template std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix<Rational>&);
template std::size_t subspace_dim_sum(std::span<const std::vector<Residue>>,
                                      std::span<const std::vector<Residue>>);
template std::size_t subspace_dim_sum(std::span<const std::vector<Rational>>,
                                      std::span<const std::vector<Rational>>);

namespace serial {
template RrefResult<Residue> rref(const DenseMatrix<Residue>&);
template RrefResult<Rational> rref(const DenseMatrix<Rational>&);
template std::size_t rank(const DenseMatrix<Residue>&);
template std::size_t rank(const DenseMatrix<Rational>&);
}  // namespace serial

}  // namespace jsyz
