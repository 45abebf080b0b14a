#pragma once

// Graded pieces of the syzygy module D_0(f) of (f_x, f_y, f_z), its minimal
// generators and the degrees of the minimal relations among them.
//
// Everything is degreewise linear algebra. Dimensions are computed either
// over the rationals or modulo 2^31 - 1; generator representatives are always
// rational. In prime mode the modular dimensions are certified afterwards: the
// rational generators, reduced mod p, must span a space of the modular
// nullity in every degree up to 2d+1, which pins the rational dimension
// between two equal numbers.

#include <cstddef>
#include <optional>
#include <vector>

#include "jsyz/check.hpp"
#include "jsyz/poly_ring.hpp"

namespace jsyz {

enum class FieldMode { Rational, Prime };

struct SyzygySummary {
  int d = 0;
  int m = 0;
  std::vector<int> exponents;
  std::vector<SyzygyVector> generators;
  /// Degrees of minimal relations, in the grading of D_0(f).
  std::vector<int> relation_degrees;
  std::vector<int> epsilons;
  int regularity = 0;
  bool is_free = false;
  /// dim D_0(f)_k for k = 0 .. 2d+1 (certified over Q).
  std::vector<std::size_t> d0_dims;
};

/// Nullity of S_k^3 -> S_{k+d-1}. In prime mode this is the modular nullity,
/// an upper bound for the rational one.
std::size_t d0_dimension(const HomogeneousPoly& f, int k, FieldMode mode = FieldMode::Rational);

/// Minimal generators by graded Nakayama over k = 0 .. 2d-4, then the
/// dimension certificate up to 2d+1. Relation data are left empty.
/// Throws InputError for d < 3 and ConsistencyError when the scan or the
/// certificate fails.
SyzygySummary exponents(const HomogeneousPoly& f, FieldMode mode = FieldMode::Prime);

/// Fills relation_degrees, epsilons and regularity. Relations are found by
/// Nakayama on the kernel of the generator multiples; the result must agree
/// with the degrees read off the Hilbert function of the relation module.
SyzygySummary relation_degrees(const HomogeneousPoly& f, SyzygySummary s,
                               FieldMode mode = FieldMode::Prime);

/// Degrees of the coefficients alpha_{i,j} in the relations
/// sum_j alpha_{i,j} r_j = 0.
struct SecondSyzygyDegreeTable {
  /// rho_i - d_j, absent when negative (the coefficient must vanish).
  std::vector<std::vector<std::optional<int>>> degree;
  /// d_m - d_j + eps_i.
  std::vector<std::vector<int>> shifted_formula;
  /// Whether both tables coincide on every present entry.
  bool formula_agrees = true;
  /// Degree bounds of the single relation, evaluated for subtype 3A only.
  std::vector<Check> bound_checks;
};

/// Throws InputError on a free curve.
SecondSyzygyDegreeTable second_syzygy_degree_table(const SyzygySummary& s);

}  // namespace jsyz
