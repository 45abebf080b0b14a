#pragma once

// Exact scalars and dense linear algebra.
//
// Two scalar types are supported: GMP rationals and residues modulo the
// Mersenne prime 2^31 - 1. Every algorithm below is instantiated for both.
// The default entry points are the OpenMP kernels; the implementations in
// namespace `serial` are straightforward textbook versions kept as a
// reference for the tests and the benchmark.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jsyz {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint32_t kPrime = 2147483647u;  // 2^31 - 1

class Residue {
 public:
  constexpr Residue() = default;
  constexpr explicit Residue(int v) {
    const std::int64_t m = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(kPrime);
    v_ = static_cast<std::uint32_t>(m < 0 ? m + kPrime : m);
  }

  static constexpr Residue from_canonical(std::uint32_t v) {
    Residue r;
    r.v_ = v;
    return r;
  }
  static Residue from_int64(std::int64_t v);
  static Residue from_integer(const Integer& v);
  /// Throws InputError when the denominator vanishes modulo the prime.
  static Residue from_rational(const Rational& v);

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  Residue inverse() const;

  friend constexpr Residue operator+(Residue a, Residue b) {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= kPrime) s -= kPrime;
    return from_canonical(s);
  }
  friend constexpr Residue operator-(Residue a, Residue b) {
    return from_canonical(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kPrime - b.v_);
  }
  friend constexpr Residue operator-(Residue a) {
    return from_canonical(a.v_ == 0 ? 0 : kPrime - a.v_);
  }
  friend constexpr Residue operator*(Residue a, Residue b) {
    return from_canonical(reduce(static_cast<std::uint64_t>(a.v_) * b.v_));
  }
  Residue& operator+=(Residue o) { return *this = *this + o; }
  Residue& operator-=(Residue o) { return *this = *this - o; }
  Residue& operator*=(Residue o) { return *this = *this * o; }
  friend constexpr bool operator==(Residue, Residue) = default;

  /// x < 2^62  ->  x mod (2^31 - 1)
  static constexpr std::uint32_t reduce(std::uint64_t x) {
    x = (x & kPrime) + (x >> 31);
    x = (x & kPrime) + (x >> 31);
    return static_cast<std::uint32_t>(x >= kPrime ? x - kPrime : x);
  }

 private:
  std::uint32_t v_ = 0;
};

inline bool is_zero(const Residue& r) { return r.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

template <class T>
T scalar_from(const Rational& q);
template <>
inline Rational scalar_from<Rational>(const Rational& q) { return q; }
template <>
inline Residue scalar_from<Residue>(const Rational& q) { return Residue::from_rational(q); }

template <class T>
T scalar_from_integer(const Integer& z);
template <>
inline Rational scalar_from_integer<Rational>(const Integer& z) { return Rational(z); }
template <>
inline Residue scalar_from_integer<Residue>(const Integer& z) { return Residue::from_integer(z); }

std::string to_string(const Residue& r);
std::string to_string(const Rational& q);

/// Row-major dense matrix. Entries default to zero.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix from row vectors; every row must have `cols` entries.
  static DenseMatrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

template <class T>
struct RrefResult {
  DenseMatrix<T> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Pivot search is column by column, left to
/// right, taking the topmost remaining row with a nonzero entry.
template <class T>
RrefResult<T> rref(const DenseMatrix<T>& m);

/// Rank by forward elimination only.
template <class T>
std::size_t rank(const DenseMatrix<T>& m);

/// Right null space basis, one vector per free column in increasing order:
/// the free variable is set to 1, the other free variables to 0.
template <class T>
std::vector<std::vector<T>> kernel_basis(const DenseMatrix<T>& m);
template <class T>
std::vector<std::vector<T>> kernel_basis(const RrefResult<T>& r);

/// dim span(a ∪ b). Throws InputError on vectors of different lengths.
template <class T>
std::size_t subspace_dim_sum(std::span<const std::vector<T>> a, std::span<const std::vector<T>> b);

namespace serial {
template <class T>
RrefResult<T> rref(const DenseMatrix<T>& m);
template <class T>
std::size_t rank(const DenseMatrix<T>& m);
}  // namespace serial

/// Grows a subspace one vector at a time; `insert` reports whether the
/// vector was independent of everything inserted before.
template <class T>
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length);
  ~SpanBuilder();
  SpanBuilder(SpanBuilder&&) noexcept;
  SpanBuilder& operator=(SpanBuilder&&) noexcept;

  bool insert(std::span<const T> v);
  std::size_t dim() const;
  std::size_t length() const { return length_; }

 private:
  struct Impl;
  std::size_t length_;
  Impl* impl_;
};

/// Clears denominators and removes the content, leading nonzero entry positive.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);

}  // namespace jsyz
