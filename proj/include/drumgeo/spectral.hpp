#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "drumgeo/domain.hpp"
#include "drumgeo/exact.hpp"

namespace drumgeo {

// Residual acceptance scale for the eigensolver, relative to the matrix
// infinity norm.
inline constexpr double kResidualScale = 1e-8;

// Iteration budget for the subspace eigensolver.
inline constexpr int kIterationBudget = 10000;

// Interior lattice nodes of a tile domain at mesh width h. Node (i, j)
// stands for the point (i*h, j*h); only points strictly inside the domain
// are kept. Nodes are ordered by y then x so the layout is reproducible.
struct Grid {
  Rational h;
  std::vector<std::pair<long, long>> nodes;
  std::map<std::pair<long, long>, int> index;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Builds the interior grid. The mesh width must be of the form 1/2^m and
// every domain vertex must lie on the lattice, otherwise the five point
// stencil would cut through boundary segments.
Grid build_grid(const TileDomain& domain, const Rational& h);

// Dirichlet Laplacian on the grid via the five point stencil: 4/h^2 on the
// diagonal, -1/h^2 for each interior neighbor. Throws EmptyGrid when the
// grid has no nodes.
Eigen::SparseMatrix<double> discretize(const Grid& grid);

// Computed spectrum of one discretized domain.
struct Spectrum {
  Rational h;
  int k = 0;
  std::vector<double> eigenvalues;
  std::vector<double> residuals;
};

// Smallest k eigenvalues of a symmetric positive definite sparse matrix,
// ascending, with the 2-norm residual of each eigenpair. Uses a seeded
// subspace iteration on the factored matrix; small problems fall back to a
// dense solve. Throws ConvergenceFailure when the residual target is not
// met within the iteration budget.
void smallest_eigenvalues(const Eigen::SparseMatrix<double>& matrix, int k,
                          std::uint64_t seed, std::vector<double>& values,
                          std::vector<double>& residuals);

// Full pipeline: grid, stencil, eigensolve.
Spectrum spectrum_of(const TileDomain& domain, const Rational& h, int k,
                     std::uint64_t seed = kDefaultSeed);

// Per-eigenvalue relative differences between two spectra computed at the
// same mesh width.
struct SpectrumComparison {
  std::vector<double> rel_diffs;
  double max_rel_diff = 0.0;
};

SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b,
                                   int k);

// Ratio of a coarse-mesh discrepancy to a fine-mesh one, used to judge
// whether the discrepancy shrinks under refinement.
double shrink_ratio(double coarse_max, double fine_max);

// Least squares fit of the counting function N(lambda) = slope * lambda
// against the asymptotic slope area / (4 pi), restricted to the upper half
// of the computed range where the asymptotic regime dominates.
struct WeylFit {
  double slope = 0.0;
  double expected = 0.0;
  double ratio = 0.0;
  int points_used = 0;
};

WeylFit weyl_fit(const std::vector<double>& eigenvalues, double area);

inline WeylFit weyl_fit(const Spectrum& s, double area) {
  return weyl_fit(s.eigenvalues, area);
}

}  // namespace drumgeo
