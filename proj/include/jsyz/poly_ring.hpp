#pragma once

// Homogeneous polynomials in x, y, z over the rationals, monomial bases per
// degree, and the matrices of multiplication maps between graded pieces.
//
// Monomial order is graded lexicographic with x > y > z. Inside one degree k
// the basis lists x^a y^b z^c with a descending, then b descending, so x^k
// comes first and z^k last.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jsyz/exact_arith.hpp"

namespace jsyz {

struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  constexpr int degree() const { return a + b + c; }
  constexpr Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b, c + o.c}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Orders monomials of equal degree as the basis does (x^k first).
struct BasisOrder {
  bool operator()(const Monomial& l, const Monomial& r) const {
    if (l.degree() != r.degree()) return l.degree() > r.degree();
    if (l.a != r.a) return l.a > r.a;
    return l.b > r.b;
  }
};

/// dim S_k = (k+2)(k+1)/2, and 0 for negative k.
constexpr std::size_t dim_S(int k) {
  return k < 0 ? 0 : static_cast<std::size_t>(k + 2) * static_cast<std::size_t>(k + 1) / 2;
}

/// Position of a monomial in the basis of its own degree.
constexpr std::size_t monomial_index(const Monomial& m) {
  const auto k = static_cast<std::size_t>(m.degree());
  const auto ka = k - static_cast<std::size_t>(m.a);
  return ka * (ka + 1) / 2 + (ka - static_cast<std::size_t>(m.b));
}

class MonomialBasis {
 public:
  explicit MonomialBasis(int k);

  int degree() const { return k_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  auto begin() const { return monomials_.begin(); }
  auto end() const { return monomials_.end(); }

 private:
  int k_;
  std::vector<Monomial> monomials_;
};

class HomogeneousPoly {
 public:
  using Terms = std::map<Monomial, Rational, BasisOrder>;

  /// The zero form of the given degree.
  explicit HomogeneousPoly(int degree = 0) : degree_(degree) {}
  /// Throws InputError when a term has the wrong degree; drops zero terms.
  HomogeneousPoly(int degree, const Terms& terms);

  static HomogeneousPoly constant(const Rational& c);
  /// var = 0, 1, 2 for x, y, z.
  static HomogeneousPoly variable(int var);
  static HomogeneousPoly monomial(const Monomial& m, const Rational& c = 1);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  HomogeneousPoly derivative(int var) const;
  HomogeneousPoly pow(unsigned e) const;
  HomogeneousPoly scaled(const Rational& c) const;
  /// Divides by the content so the coefficients are coprime integers with a
  /// positive leading coefficient.
  HomogeneousPoly primitive() const;

  /// Coefficients in basis order for degree `degree()`.
  template <class T>
  std::vector<T> coefficients() const;
  static HomogeneousPoly from_coefficients(int degree, std::span<const Rational> coeffs);

  std::string to_string() const;

  friend HomogeneousPoly operator+(const HomogeneousPoly& l, const HomogeneousPoly& r);
  friend HomogeneousPoly operator-(const HomogeneousPoly& l, const HomogeneousPoly& r);
  friend HomogeneousPoly operator-(const HomogeneousPoly& p);
  friend HomogeneousPoly operator*(const HomogeneousPoly& l, const HomogeneousPoly& r);
  friend bool operator==(const HomogeneousPoly& l, const HomogeneousPoly& r) {
    return l.degree_ == r.degree_ && l.terms_ == r.terms_;
  }

 private:
  int degree_ = 0;
  Terms terms_;
};

/// Grammar: variables x y z, integer and rational literals, + - * ^,
/// parentheses, unary minus. Throws InputError on syntax errors and on
/// non-homogeneous input (naming two different term degrees).
HomogeneousPoly parse_poly(std::string_view text);

std::array<HomogeneousPoly, 3> jacobian(const HomogeneousPoly& f);

/// Matrix of S_k -> S_{k+deg g}, h -> g*h. Columns follow MonomialBasis(k).
template <class T>
DenseMatrix<T> multiplication_matrix(const HomogeneousPoly& g, int k);

/// Matrix of S_k^3 -> S_{k+e}, (a,b,c) -> a*g0 + b*g1 + c*g2 where all gi have
/// degree e. Columns: the a block, then b, then c.
template <class T>
DenseMatrix<T> jacobian_map(const std::array<HomogeneousPoly, 3>& g, int k);

/// A triple (a,b,c) of forms of degree k with a*f_x + b*f_y + c*f_z = 0.
class SyzygyVector {
 public:
  /// Throws ConsistencyError unless the relation holds exactly.
  SyzygyVector(const std::array<HomogeneousPoly, 3>& partials, std::array<HomogeneousPoly, 3> comps);

  /// Builds from a coefficient vector laid out as the columns of jacobian_map.
  static SyzygyVector from_vector(const std::array<HomogeneousPoly, 3>& partials, int k,
                                  std::span<const Rational> v);

  int degree() const { return comps_[0].degree(); }
  const std::array<HomogeneousPoly, 3>& components() const { return comps_; }
  /// Coefficients in the jacobian_map column layout.
  template <class T>
  std::vector<T> to_vector() const;

 private:
  std::array<HomogeneousPoly, 3> comps_;
};

/// The multiples mu*s for all monomials mu of degree k - deg s, each as a
/// vector in the jacobian_map column layout for degree k.
template <class T>
std::vector<std::vector<T>> shifted_multiples(const SyzygyVector& s, int k);

}  // namespace jsyz
