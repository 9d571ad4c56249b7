#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drumgeo {

using Int = mpz_class;
using Rational = mpq_class;

// Dense matrix over exact rationals. Small and deliberately plain; all the
// heavy lifting happens in the free functions below.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_integral() const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const Rational& c, const ExactMatrix& a);

// 0/1 matrix of a permutation p: entry (i, p(i)) = 1, so for row vectors x,
// (P x)_i = x_{p(i)} pulls the image value back to position i.
ExactMatrix permutation_matrix(const std::vector<int>& images);

// Exact determinant. Integer matrices go through fraction-free Bareiss
// elimination; rational ones are row-scaled to integers first and the scale
// divided back out, which avoids denominator growth during elimination.
Rational determinant(const ExactMatrix& m);  // throws NotSquare

// Basis of {T : row_perms[g] . T = T . col_perms[g] for all g}, with the
// permutations given as image rows of equal counts. For permutation
// constraints every equation of the stacked linear system says two entries
// of T are equal, so its exact nullspace is spanned by the 0/1 indicators of
// the connected components of cells under (i, j) -> (row_g(i), col_g(j));
// these indicators are returned, ordered by least cell.
std::vector<ExactMatrix> intertwiner_basis(
    const std::vector<std::vector<int>>& row_perms,
    const std::vector<std::vector<int>>& col_perms);

inline constexpr std::uint64_t kDefaultSeed = 0x5eedace5u;

// Deterministic search for an invertible combination of the basis: sweeps
// integer coefficient vectors with entries in {-3..3} by increasing radius
// (capped at 20000 candidates), then 64 seeded pseudo-random draws with
// entries in {-9..9}. Returns the first combination with nonzero
// determinant, or nothing if the budget is exhausted.
std::optional<ExactMatrix> find_invertible_combination(
    const std::vector<ExactMatrix>& basis, std::uint64_t seed = kDefaultSeed);

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace drumgeo
