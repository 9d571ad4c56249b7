#include "drumgeo/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

#include "drumgeo/error.hpp"

namespace drumgeo {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool ExactMatrix::is_integral() const {
  for (const Rational& x : a_)
    if (x.get_den() != 1) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const Rational& x : a_)
    if (x != 0) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw MismatchedParameters("matrix product shape mismatch");
  ExactMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw MismatchedParameters("matrix sum shape mismatch");
  ExactMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

ExactMatrix operator*(const Rational& c, const ExactMatrix& a) {
  ExactMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

ExactMatrix permutation_matrix(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, images[i]) = 1;
  return m;
}

namespace {

// Fraction-free Gaussian elimination (Bareiss). Every intermediate value is
// an integer and every division is exact, so there is no coefficient blowup
// beyond the determinant-minor bound.
Int bareiss_determinant(std::vector<Int> a, int n) {
  auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

}  // namespace

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant requires a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<Int> a(static_cast<std::size_t>(n) * n);
  Rational scale = 1;
  for (int i = 0; i < n; ++i) {
    Int lcm = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    scale /= Rational(lcm);
    for (int j = 0; j < n; ++j) {
      Rational scaled = m.at(i, j) * Rational(lcm);
      a[static_cast<std::size_t>(i) * n + j] = scaled.get_num();
    }
  }
  Rational det(bareiss_determinant(std::move(a), n));
  det *= scale;
  det.canonicalize();
  return det;
}

std::vector<ExactMatrix> intertwiner_basis(
    const std::vector<std::vector<int>>& row_perms,
    const std::vector<std::vector<int>>& col_perms) {
  if (row_perms.size() != col_perms.size())
    throw MismatchedParameters("need one column permutation per row permutation");
  if (row_perms.empty()) throw MismatchedParameters("need at least one permutation pair");
  const int nr = static_cast<int>(row_perms.front().size());
  const int nc = static_cast<int>(col_perms.front().size());

  // Union-find over the nr*nc cells of T. The constraint P T = T Q with
  // permutation matrices P, Q reads T[p(i)][j] = T[i][q^{-1}(j)], i.e. cell
  // (i, j) is glued to (p(i), q(j)) for every generator pair (p, q).
  std::vector<int> parent(static_cast<std::size_t>(nr) * nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> find_stack;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  for (std::size_t g = 0; g < row_perms.size(); ++g) {
    const std::vector<int>& p = row_perms[g];
    const std::vector<int>& q = col_perms[g];
    if (static_cast<int>(p.size()) != nr || static_cast<int>(q.size()) != nc)
      throw MismatchedParameters("permutation degree mismatch across generators");
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) unite(i * nc + j, p[i] * nc + q[j]);
  }

  // One indicator matrix per component, ordered by the component's least
  // cell so the basis is reproducible.
  std::vector<int> root_index(parent.size(), -1);
  std::vector<ExactMatrix> basis;
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      int r = find(i * nc + j);
      if (root_index[r] < 0) {
        root_index[r] = static_cast<int>(basis.size());
        basis.emplace_back(nr, nc);
      }
      basis[root_index[r]].at(i, j) = 1;
    }
  return basis;
}

std::optional<ExactMatrix> find_invertible_combination(
    const std::vector<ExactMatrix>& basis, std::uint64_t seed) {
  if (basis.empty()) return std::nullopt;
  const int dim = static_cast<int>(basis.size());
  const int nr = basis.front().rows();
  const int nc = basis.front().cols();
  if (nr != nc) return std::nullopt;

  auto combine = [&](const std::vector<int>& coeff) {
    ExactMatrix m(nr, nc);
    for (int b = 0; b < dim; ++b) {
      if (coeff[b] == 0) continue;
      m = m + Rational(coeff[b]) * basis[b];
    }
    return m;
  };
  auto usable = [&](const std::vector<int>& coeff, ExactMatrix* out) {
    ExactMatrix m = combine(coeff);
    if (m.is_zero()) return false;
    if (determinant(m) == 0) return false;
    *out = std::move(m);
    return true;
  };

  // Coefficient sweep in {-3..3}^dim ordered by max-norm radius then
  // lexicographically, so small combinations (single indicators first) are
  // tried before mixed ones. Capped to keep high-dimensional bases cheap.
  constexpr int kSweepCap = 20000;
  ExactMatrix found;
  int tried = 0;
  for (int radius = 1; radius <= 3 && tried < kSweepCap; ++radius) {
    std::vector<int> coeff(dim, -radius);
    for (;;) {
      int maxabs = 0;
      for (int c : coeff) maxabs = std::max(maxabs, std::abs(c));
      if (maxabs == radius) {
        if (++tried > kSweepCap) break;
        if (usable(coeff, &found)) return found;
      }
      int pos = dim - 1;
      while (pos >= 0 && coeff[pos] == radius) coeff[pos--] = -radius;
      if (pos < 0) break;
      ++coeff[pos];
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> coeff(dim);
    for (int& c : coeff) c = dist(rng);
    if (usable(coeff, &found)) return found;
  }
  return std::nullopt;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw Error("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace drumgeo
