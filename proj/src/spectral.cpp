#include "drumgeo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include "drumgeo/error.hpp"

namespace drumgeo {

namespace {

bool is_inverse_power_of_two(const Rational& h) {
  if (h <= 0) return false;
  if (h.get_num() != 1) return false;
  return mpz_popcount(h.get_den().get_mpz_t()) == 1;
}

// Lattice index of an h-aligned rational coordinate.
long lattice_index(const Rational& c, const Rational& h) {
  Rational q = c / h;
  if (q.get_den() != 1)
    throw PreconditionUnmet("domain vertex does not lie on the grid");
  return q.get_num().get_si();
}

}  // namespace

Grid build_grid(const TileDomain& domain, const Rational& h) {
  if (!is_inverse_power_of_two(h))
    throw PreconditionUnmet("mesh width must be 1 over a power of two");

  Rational xmin, xmax, ymin, ymax;
  domain.bounds(&xmin, &xmax, &ymin, &ymax);
  for (const Triangle& t : domain.tiles())
    for (const RPoint& v : t.v) {
      lattice_index(v.x, h);
      lattice_index(v.y, h);
    }

  const long i0 = lattice_index(xmin, h);
  const long i1 = lattice_index(xmax, h);
  const long j0 = lattice_index(ymin, h);
  const long j1 = lattice_index(ymax, h);

  Grid grid;
  grid.h = h;
  for (long j = j0; j <= j1; ++j)
    for (long i = i0; i <= i1; ++i) {
      const RPoint p{Rational(i) * h, Rational(j) * h};
      if (!domain.contains_interior(p)) continue;
      grid.index.emplace(std::make_pair(i, j), grid.size());
      grid.nodes.emplace_back(i, j);
    }
  return grid;
}

Eigen::SparseMatrix<double> discretize(const Grid& grid) {
  const int n = grid.size();
  if (n == 0) throw EmptyGrid("no interior nodes at this mesh width");

  const double hd = grid.h.get_d();
  const double scale = 1.0 / (hd * hd);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(n) * 5);
  for (int r = 0; r < n; ++r) {
    const auto [i, j] = grid.nodes[r];
    entries.emplace_back(r, r, 4.0 * scale);
    const std::pair<long, long> sides[4] = {
        {i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
    for (const auto& s : sides) {
      auto it = grid.index.find(s);
      if (it != grid.index.end()) entries.emplace_back(r, it->second, -scale);
    }
  }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

namespace {

double infinity_norm(const Eigen::SparseMatrix<double>& m) {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(m.rows());
  for (int c = 0; c < m.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it)
      sums[it.row()] += std::abs(it.value());
  return sums.maxCoeff();
}

void ritz_residuals(const Eigen::SparseMatrix<double>& m,
                    const Eigen::MatrixXd& vectors,
                    const Eigen::VectorXd& values, int k,
                    std::vector<double>& out) {
  out.resize(k);
  for (int i = 0; i < k; ++i)
    out[i] =
        (m * vectors.col(i) - values[i] * vectors.col(i)).norm();
}

}  // namespace

void smallest_eigenvalues(const Eigen::SparseMatrix<double>& matrix, int k,
                          std::uint64_t seed, std::vector<double>& values,
                          std::vector<double>& residuals) {
  const int n = static_cast<int>(matrix.rows());
  if (k < 1) throw DegenerateParameters("eigenvalue count must be positive");
  if (k > n)
    throw MismatchedParameters("requested " + std::to_string(k) +
                               " eigenvalues from a matrix of size " +
                               std::to_string(n));

  const double tol = kResidualScale * infinity_norm(matrix);
  int block = std::max(k + 8, (13 * k) / 10);
  if (block > n) block = n;

  if (n <= 512 || block == n) {
    const Eigen::MatrixXd dense(matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    Eigen::VectorXd vals = es.eigenvalues().head(k);
    Eigen::MatrixXd vecs = es.eigenvectors().leftCols(k);
    values.assign(vals.data(), vals.data() + k);
    ritz_residuals(matrix, vecs, vals, k, residuals);
    return;
  }

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> factor(matrix);
  if (factor.info() != Eigen::Success)
    throw ConvergenceFailure("stencil matrix factorization failed");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd x(n, block);
  for (int c = 0; c < block; ++c)
    for (int r = 0; r < n; ++r) x(r, c) = dist(rng);

  Eigen::VectorXd ritz_values;
  for (int iter = 0; iter < kIterationBudget; ++iter) {
    Eigen::MatrixXd y = factor.solve(x);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(n, block);
    Eigen::MatrixXd h = q.transpose() * (matrix * q);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    x = q * es.eigenvectors();
    ritz_values = es.eigenvalues();

    bool converged = true;
    for (int i = 0; i < k && converged; ++i)
      converged =
          (matrix * x.col(i) - ritz_values[i] * x.col(i)).norm() <= tol;
    if (converged) {
      values.assign(ritz_values.data(), ritz_values.data() + k);
      ritz_residuals(matrix, x, ritz_values, k, residuals);
      return;
    }
  }
  throw ConvergenceFailure("eigensolver did not converge within " +
                           std::to_string(kIterationBudget) + " iterations");
}

Spectrum spectrum_of(const TileDomain& domain, const Rational& h, int k,
                     std::uint64_t seed) {
  const Grid grid = build_grid(domain, h);
  const Eigen::SparseMatrix<double> m = discretize(grid);
  Spectrum s;
  s.h = h;
  s.k = k;
  smallest_eigenvalues(m, k, seed, s.eigenvalues, s.residuals);
  return s;
}

SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b,
                                   int k) {
  if (a.h != b.h)
    throw MismatchedParameters("spectra were computed at different widths");
  if (k < 1) throw DegenerateParameters("eigenvalue count must be positive");
  if (static_cast<int>(a.eigenvalues.size()) < k ||
      static_cast<int>(b.eigenvalues.size()) < k)
    throw InsufficientSpectrum("fewer eigenvalues available than requested");

  SpectrumComparison cmp;
  cmp.rel_diffs.resize(k);
  for (int i = 0; i < k; ++i) {
    const double av = a.eigenvalues[i];
    const double d = std::abs(av - b.eigenvalues[i]);
    cmp.rel_diffs[i] =
        av == 0.0 ? (d == 0.0 ? 0.0
                              : std::numeric_limits<double>::infinity())
                  : d / std::abs(av);
    cmp.max_rel_diff = std::max(cmp.max_rel_diff, cmp.rel_diffs[i]);
  }
  return cmp;
}

double shrink_ratio(double coarse_max, double fine_max) {
  if (fine_max == 0.0)
    return coarse_max == 0.0 ? 1.0
                             : std::numeric_limits<double>::infinity();
  return coarse_max / fine_max;
}

WeylFit weyl_fit(const std::vector<double>& eigenvalues, double area) {
  if (area <= 0.0) throw DegenerateParameters("area must be positive");
  if (eigenvalues.empty())
    throw InsufficientSpectrum("cannot fit an empty spectrum");

  const double cut = eigenvalues.back() / 2.0;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues[i] >= cut) {
      xs.push_back(eigenvalues[i]);
      ys.push_back(static_cast<double>(i + 1));
    }
  if (xs.size() < 2)
    throw InsufficientSpectrum(
        "need at least two eigenvalues in the fit window");

  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0)
    throw InsufficientSpectrum("degenerate eigenvalue cluster in fit window");

  WeylFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.expected = area / (4.0 * std::acos(-1.0));
  fit.ratio = fit.slope / fit.expected;
  fit.points_used = static_cast<int>(xs.size());
  return fit;
}

}  // namespace drumgeo
