#include "jsyz/poly_ring.hpp"

#include <cctype>
#include <utility>

#include "jsyz/errors.hpp"

namespace jsyz {

MonomialBasis::MonomialBasis(int k) : k_(k) {
  if (k < 0) return;
  monomials_.reserve(dim_S(k));
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) monomials_.push_back({a, b, k - a - b});
}

// ------------------------------------------------------- HomogeneousPoly

HomogeneousPoly::HomogeneousPoly(int degree, const Terms& terms) : degree_(degree) {
  for (const auto& [m, c] : terms) {
    if (m.degree() != degree) throw InputError("term degree differs from polynomial degree");
    if (sgn(c) != 0) terms_.emplace(m, c);
  }
}

HomogeneousPoly HomogeneousPoly::constant(const Rational& c) { return monomial({0, 0, 0}, c); }

HomogeneousPoly HomogeneousPoly::variable(int var) {
  Monomial m;
  if (var == 0) m.a = 1;
  else if (var == 1) m.b = 1;
  else m.c = 1;
  return monomial(m);
}

HomogeneousPoly HomogeneousPoly::monomial(const Monomial& m, const Rational& c) {
  HomogeneousPoly p(m.degree());
  if (sgn(c) != 0) p.terms_.emplace(m, c);
  return p;
}

Rational HomogeneousPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

HomogeneousPoly HomogeneousPoly::derivative(int var) const {
  HomogeneousPoly out(degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    int e = 0;
    if (var == 0) e = n.a--;
    else if (var == 1) e = n.b--;
    else e = n.c--;
    if (e == 0) continue;
    out.terms_.emplace(n, c * e);
  }
  return out;
}

HomogeneousPoly HomogeneousPoly::pow(unsigned e) const {
  HomogeneousPoly acc = constant(1);
  HomogeneousPoly base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

HomogeneousPoly HomogeneousPoly::scaled(const Rational& c) const {
  HomogeneousPoly out(degree_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

HomogeneousPoly HomogeneousPoly::primitive() const {
  if (is_zero()) return *this;
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : terms_) coeffs.push_back(c);
  const auto ints = primitive_integer_vector(coeffs);
  HomogeneousPoly out(degree_);
  std::size_t i = 0;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(ints[i++]));
  return out;
}

template <class T>
std::vector<T> HomogeneousPoly::coefficients() const {
  std::vector<T> v(dim_S(degree_));
  for (const auto& [m, c] : terms_) v[monomial_index(m)] = scalar_from<T>(c);
  return v;
}
template std::vector<Residue> HomogeneousPoly::coefficients<Residue>() const;
template std::vector<Rational> HomogeneousPoly::coefficients<Rational>() const;

HomogeneousPoly HomogeneousPoly::from_coefficients(int degree, std::span<const Rational> coeffs) {
  if (coeffs.size() != dim_S(degree)) throw InputError("coefficient count does not match degree");
  HomogeneousPoly p(degree);
  const MonomialBasis basis(degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) p.terms_.emplace(basis[i], coeffs[i]);
  return p;
}

namespace {

void append_power(std::string& s, char var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) s += '*';
  s += var;
  if (e > 1) s += '^' + std::to_string(e);
  first_factor = false;
}

}  // namespace

std::string HomogeneousPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (sgn(c) < 0) s += '-';
    else if (!first) s += '+';
    first = false;
    bool first_factor = true;
    if (mag != 1 || m.degree() == 0) {
      s += mag.get_str();
      first_factor = false;
    }
    append_power(s, 'x', m.a, first_factor);
    append_power(s, 'y', m.b, first_factor);
    append_power(s, 'z', m.c, first_factor);
  }
  return s;
}

HomogeneousPoly operator+(const HomogeneousPoly& l, const HomogeneousPoly& r) {
  if (l.is_zero()) return r;
  if (r.is_zero()) return l;
  if (l.degree_ != r.degree_) throw InputError("adding forms of different degrees");
  HomogeneousPoly out = l;
  for (const auto& [m, c] : r.terms_) {
    auto [it, inserted] = out.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) out.terms_.erase(it);
    }
  }
  return out;
}

HomogeneousPoly operator-(const HomogeneousPoly& p) { return p.scaled(-1); }
HomogeneousPoly operator-(const HomogeneousPoly& l, const HomogeneousPoly& r) { return l + (-r); }

HomogeneousPoly operator*(const HomogeneousPoly& l, const HomogeneousPoly& r) {
  HomogeneousPoly out(l.degree_ + r.degree_);
  for (const auto& [ml, cl] : l.terms_)
    for (const auto& [mr, cr] : r.terms_) {
      const Monomial m = ml * mr;
      auto [it, inserted] = out.terms_.emplace(m, cl * cr);
      if (!inserted) it->second += cl * cr;
    }
  std::erase_if(out.terms_, [](const auto& t) { return sgn(t.second) == 0; });
  return out;
}

// ----------------------------------------------------------------- parser

namespace {

using SparsePoly = std::map<Monomial, Rational, BasisOrder>;

SparsePoly sp_add(SparsePoly l, const SparsePoly& r, int sign) {
  for (const auto& [m, c] : r) {
    auto [it, inserted] = l.emplace(m, sign * c);
    if (!inserted) {
      it->second += sign * c;
      if (sgn(it->second) == 0) l.erase(it);
    }
  }
  return l;
}

SparsePoly sp_mul(const SparsePoly& l, const SparsePoly& r) {
  SparsePoly out;
  for (const auto& [ml, cl] : l)
    for (const auto& [mr, cr] : r) {
      auto [it, inserted] = out.emplace(ml * mr, cl * cr);
      if (!inserted) it->second += cl * cr;
    }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  SparsePoly parse() {
    SparsePoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  SparsePoly expr() {
    SparsePoly acc = term();
    for (;;) {
      if (accept('+')) acc = sp_add(std::move(acc), term(), 1);
      else if (accept('-')) acc = sp_add(std::move(acc), term(), -1);
      else return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = unary();
    while (accept('*')) acc = sp_mul(acc, unary());
    return acc;
  }

  SparsePoly unary() {
    if (accept('-')) return sp_add({}, unary(), -1);
    if (accept('+')) return unary();
    return power();
  }

  SparsePoly power() {
    SparsePoly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::string e = digits();
    if (e.empty()) fail("exponent must be a nonnegative integer literal");
    if (e.size() > 4) fail("exponent too large");
    SparsePoly acc{{Monomial{}, Rational(1)}};
    for (int i = std::stoi(e); i > 0; --i) acc = sp_mul(acc, base);
    return acc;
  }

  SparsePoly primary() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (accept('(')) {
      SparsePoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (ch == 'x' || ch == 'y' || ch == 'z') {
      ++pos_;
      Monomial m;
      (ch == 'x' ? m.a : ch == 'y' ? m.b : m.c) = 1;
      return {{m, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      Rational q{Integer(num)};
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        Integer den(digits());
        if (den == 0) fail("zero denominator");
        q = Rational(Integer(num), den);
        q.canonicalize();
      }
      if (sgn(q) == 0) return {};
      return {{Monomial{}, q}};
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogeneousPoly parse_poly(std::string_view text) {
  const SparsePoly p = Parser(text).parse();
  if (p.empty()) return HomogeneousPoly(0);
  const int d = p.begin()->first.degree();
  for (const auto& [m, c] : p)
    if (m.degree() != d)
      throw InputError("polynomial is not homogeneous: terms of degree " + std::to_string(d) +
                       " and " + std::to_string(m.degree()));
  return HomogeneousPoly(d, p);
}

std::array<HomogeneousPoly, 3> jacobian(const HomogeneousPoly& f) {
  return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

template <class T>
DenseMatrix<T> multiplication_matrix(const HomogeneousPoly& g, int k) {
  const int e = g.degree();
  DenseMatrix<T> m(dim_S(k + e), dim_S(k));
  if (k < 0) return m;
  std::vector<std::pair<Monomial, T>> terms;
  for (const auto& [mon, c] : g.terms()) terms.emplace_back(mon, scalar_from<T>(c));
  const MonomialBasis basis(k);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [mon, c] : terms) m(monomial_index(basis[j] * mon), j) = c;
  return m;
}
template DenseMatrix<Residue> multiplication_matrix(const HomogeneousPoly&, int);
template DenseMatrix<Rational> multiplication_matrix(const HomogeneousPoly&, int);

template <class T>
DenseMatrix<T> jacobian_map(const std::array<HomogeneousPoly, 3>& g, int k) {
  const int e = g[0].degree();
  const std::size_t n = dim_S(k);
  DenseMatrix<T> m(dim_S(k + e), 3 * n);
  if (k < 0) return m;
  const MonomialBasis basis(k);
  for (int v = 0; v < 3; ++v) {
    std::vector<std::pair<Monomial, T>> terms;
    for (const auto& [mon, c] : g[v].terms()) terms.emplace_back(mon, scalar_from<T>(c));
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [mon, c] : terms) m(monomial_index(basis[j] * mon), v * n + j) = c;
  }
  return m;
}
template DenseMatrix<Residue> jacobian_map(const std::array<HomogeneousPoly, 3>&, int);
template DenseMatrix<Rational> jacobian_map(const std::array<HomogeneousPoly, 3>&, int);

// ----------------------------------------------------------- SyzygyVector

SyzygyVector::SyzygyVector(const std::array<HomogeneousPoly, 3>& partials,
                           std::array<HomogeneousPoly, 3> comps)
    : comps_(std::move(comps)) {
  const int k = comps_[0].degree();
  if (comps_[1].degree() != k || comps_[2].degree() != k)
    throw ConsistencyError("syzygy components of different degrees");
  const HomogeneousPoly s = comps_[0] * partials[0] + comps_[1] * partials[1] + comps_[2] * partials[2];
  if (!s.is_zero()) throw ConsistencyError("triple is not a syzygy of the partial derivatives");
}

SyzygyVector SyzygyVector::from_vector(const std::array<HomogeneousPoly, 3>& partials, int k,
                                       std::span<const Rational> v) {
  const std::size_t n = dim_S(k);
  if (v.size() != 3 * n) throw InputError("syzygy vector has wrong length");
  return SyzygyVector(partials, {HomogeneousPoly::from_coefficients(k, v.subspan(0, n)),
                                 HomogeneousPoly::from_coefficients(k, v.subspan(n, n)),
                                 HomogeneousPoly::from_coefficients(k, v.subspan(2 * n, n))});
}

template <class T>
std::vector<T> SyzygyVector::to_vector() const {
  const int k = degree();
  const std::size_t n = dim_S(k);
  std::vector<T> v(3 * n);
  for (int c = 0; c < 3; ++c)
    for (const auto& [m, q] : comps_[c].terms()) v[c * n + monomial_index(m)] = scalar_from<T>(q);
  return v;
}
template std::vector<Residue> SyzygyVector::to_vector<Residue>() const;
template std::vector<Rational> SyzygyVector::to_vector<Rational>() const;

template <class T>
std::vector<std::vector<T>> shifted_multiples(const SyzygyVector& s, int k) {
  const int e = k - s.degree();
  std::vector<std::vector<T>> out;
  if (e < 0) return out;
  const std::size_t n = dim_S(k);
  std::array<std::vector<std::pair<Monomial, T>>, 3> terms;
  for (int c = 0; c < 3; ++c)
    for (const auto& [m, q] : s.components()[c].terms()) terms[c].emplace_back(m, scalar_from<T>(q));
  const MonomialBasis basis(e);
  out.reserve(basis.size());
  for (const auto& mu : basis) {
    std::vector<T> v(3 * n);
    for (int c = 0; c < 3; ++c)
      for (const auto& [m, q] : terms[c]) v[c * n + monomial_index(m * mu)] = q;
    out.push_back(std::move(v));
  }
  return out;
}
template std::vector<std::vector<Residue>> shifted_multiples<Residue>(const SyzygyVector&, int);
template std::vector<std::vector<Rational>> shifted_multiples<Rational>(const SyzygyVector&, int);

}  // namespace jsyz
