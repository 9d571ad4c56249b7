#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "drumgeo/error.hpp"
#include "drumgeo/gallery.hpp"
#include "drumgeo/spectral.hpp"

using namespace drumgeo;

namespace {

const TileDomain& unit_square() {
  static const TileDomain d({
      Triangle{{RPoint{0, 0}, RPoint{1, 0}, RPoint{1, 1}}},
      Triangle{{RPoint{0, 0}, RPoint{1, 1}, RPoint{0, 1}}},
  });
  return d;
}

// Eigenvalues of the five point stencil on the unit square with n = 1/h - 1
// interior nodes per side: (4/h^2) (sin^2(j pi h / 2) + sin^2(k pi h / 2)).
std::vector<double> square_stencil_eigenvalues(int denom, int count) {
  const double pi = std::acos(-1.0);
  const double h = 1.0 / denom;
  std::vector<double> all;
  for (int j = 1; j < denom; ++j)
    for (int k = 1; k < denom; ++k) {
      const double sj = std::sin(j * pi * h / 2.0);
      const double sk = std::sin(k * pi * h / 2.0);
      all.push_back(4.0 / (h * h) * (sj * sj + sk * sk));
    }
  std::sort(all.begin(), all.end());
  all.resize(count);
  return all;
}

Spectrum fake_spectrum(const Rational& h, std::vector<double> evs) {
  Spectrum s;
  s.h = h;
  s.k = static_cast<int>(evs.size());
  s.eigenvalues = std::move(evs);
  s.residuals.assign(s.eigenvalues.size(), 0.0);
  return s;
}

}  // namespace

TEST_CASE("grid construction") {
  const Grid g = build_grid(unit_square(), Rational(1, 4));
  CHECK(g.size() == 9);  // 3 x 3 interior lattice

  // nodes are ordered by y then x and the index map matches
  for (int r = 0; r < g.size(); ++r) {
    if (r > 0)
      CHECK((g.nodes[r - 1].second < g.nodes[r].second ||
             (g.nodes[r - 1].second == g.nodes[r].second &&
              g.nodes[r - 1].first < g.nodes[r].first)));
    CHECK(g.index.at(g.nodes[r]) == r);
  }

  CHECK(build_grid(unit_square(), Rational(1, 32)).size() == 31 * 31);
}

TEST_CASE("grid preconditions") {
  CHECK_THROWS_AS(build_grid(unit_square(), Rational(1, 3)), PreconditionUnmet);
  CHECK_THROWS_AS(build_grid(unit_square(), Rational(2)), PreconditionUnmet);
  CHECK_THROWS_AS(build_grid(unit_square(), Rational(3, 8)), PreconditionUnmet);

  // a vertex off the lattice cannot be meshed at this width
  const TileDomain off({Triangle{
      {RPoint{0, 0}, RPoint{1, 0}, RPoint{0, Rational(1, 3)}}}});
  CHECK_THROWS_AS(build_grid(off, Rational(1, 4)), PreconditionUnmet);
}

TEST_CASE("stencil matrix") {
  const Grid g = build_grid(unit_square(), Rational(1, 4));
  const Eigen::SparseMatrix<double> m = discretize(g);
  REQUIRE(m.rows() == 9);
  REQUIRE(m.cols() == 9);

  const Eigen::MatrixXd d(m);
  CHECK(d.isApprox(d.transpose()));
  for (int r = 0; r < 9; ++r) CHECK(d(r, r) == 64.0);  // 4 / h^2

  // the center node has four neighbors, corner nodes two
  const int center = g.index.at({2, 2});
  const int corner = g.index.at({1, 1});
  CHECK(d.row(center).sum() == doctest::Approx(64.0 - 4 * 16.0));
  CHECK(d.row(corner).sum() == doctest::Approx(64.0 - 2 * 16.0));

  // coarse enough that nothing is interior
  const Grid none = build_grid(unit_square(), Rational(1));
  CHECK(none.size() == 0);
  CHECK_THROWS_AS(discretize(none), EmptyGrid);
}

TEST_CASE("dense path matches the closed form") {
  const Spectrum s = spectrum_of(unit_square(), Rational(1, 16), 10);
  const auto want = square_stencil_eigenvalues(16, 10);
  REQUIRE(s.eigenvalues.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CAPTURE(i);
    CHECK(s.eigenvalues[i] ==
          doctest::Approx(want[i]).epsilon(1e-12));
    CHECK(s.residuals[i] <= kResidualScale * 8.0 * 256.0);
  }
  // the double eigenvalue (1,2)/(2,1) comes out twice
  CHECK(s.eigenvalues[1] == doctest::Approx(s.eigenvalues[2]).epsilon(1e-12));
}

TEST_CASE("iterative path matches the closed form") {
  // 63 x 63 = 3969 nodes, beyond the dense cutoff
  const Spectrum s = spectrum_of(unit_square(), Rational(1, 64), 6);
  const auto want = square_stencil_eigenvalues(64, 6);
  const double tol = kResidualScale * 8.0 * 64.0 * 64.0;
  for (int i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(std::abs(s.eigenvalues[i] - want[i]) / want[i] < 1e-9);
    CHECK(s.residuals[i] <= tol);
  }
}

TEST_CASE("solver input validation") {
  const Grid g = build_grid(unit_square(), Rational(1, 4));
  const Eigen::SparseMatrix<double> m = discretize(g);
  std::vector<double> values, residuals;
  CHECK_THROWS_AS(smallest_eigenvalues(m, 0, kDefaultSeed, values, residuals),
                  DegenerateParameters);
  CHECK_THROWS_AS(smallest_eigenvalues(m, 10, kDefaultSeed, values, residuals),
                  MismatchedParameters);
}

TEST_CASE("spectra are deterministic for a fixed seed") {
  const Spectrum a = spectrum_of(unit_square(), Rational(1, 64), 4, 777);
  const Spectrum b = spectrum_of(unit_square(), Rational(1, 64), 4, 777);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.residuals == b.residuals);
}

TEST_CASE("the drum pair shares its coarse spectrum") {
  const auto [da, db] = gww_domains();
  const Spectrum a = spectrum_of(da, Rational(1, 8), 10);
  const Spectrum b = spectrum_of(db, Rational(1, 8), 10);

  CHECK(a.eigenvalues[0] == doctest::Approx(10.1736747897598).epsilon(1e-9));
  CHECK(b.eigenvalues[0] == doctest::Approx(10.1736747897598).epsilon(1e-9));

  const SpectrumComparison cmp = compare_spectra(a, b, 10);
  REQUIRE(cmp.rel_diffs.size() == 10);
  CHECK(cmp.max_rel_diff < 1e-10);
}

TEST_CASE("spectrum comparison bookkeeping") {
  const Spectrum a = fake_spectrum(Rational(1, 4), {1.0, 2.0, 4.0});
  const Spectrum b = fake_spectrum(Rational(1, 4), {1.0, 2.2, 3.0});

  const SpectrumComparison cmp = compare_spectra(a, b, 3);
  CHECK(cmp.rel_diffs[0] == 0.0);
  CHECK(cmp.rel_diffs[1] == doctest::Approx(0.1));
  CHECK(cmp.rel_diffs[2] == doctest::Approx(0.25));
  CHECK(cmp.max_rel_diff == doctest::Approx(0.25));

  CHECK(compare_spectra(a, a, 3).max_rel_diff == 0.0);

  const Spectrum other = fake_spectrum(Rational(1, 8), {1.0, 2.0, 4.0});
  CHECK_THROWS_AS(compare_spectra(a, other, 2), MismatchedParameters);
  CHECK_THROWS_AS(compare_spectra(a, b, 4), InsufficientSpectrum);
  CHECK_THROWS_AS(compare_spectra(a, b, 0), DegenerateParameters);

  // zero eigenvalues compare as equal only against zero
  const Spectrum z1 = fake_spectrum(Rational(1, 4), {0.0});
  const Spectrum z2 = fake_spectrum(Rational(1, 4), {0.5});
  CHECK(compare_spectra(z1, z1, 1).max_rel_diff == 0.0);
  CHECK(std::isinf(compare_spectra(z1, z2, 1).max_rel_diff));
}

TEST_CASE("shrink ratio conventions") {
  CHECK(shrink_ratio(0.1, 0.05) == doctest::Approx(2.0));
  CHECK(shrink_ratio(0.0, 0.0) == 1.0);
  CHECK(std::isinf(shrink_ratio(0.1, 0.0)));
}

TEST_CASE("counting function fit against the asymptotic slope") {
  // continuum eigenvalues of the unit square: pi^2 (j^2 + k^2)
  const double pi = std::acos(-1.0);
  std::vector<double> evs;
  for (int j = 1; j < 80; ++j)
    for (int k = 1; k < 80; ++k) evs.push_back(pi * pi * (j * j + k * k));
  std::sort(evs.begin(), evs.end());

  auto below = [&](double top) {
    std::vector<double> out;
    for (double e : evs)
      if (e <= top) out.push_back(e);
    return out;
  };

  const WeylFit mid = weyl_fit(below(2000.0), 1.0);
  CHECK(mid.points_used == 77);
  CHECK(mid.expected == doctest::Approx(1.0 / (4.0 * pi)));
  CHECK(mid.ratio == doctest::Approx(0.940852).epsilon(1e-4));

  const WeylFit deep = weyl_fit(below(7000.0), 1.0);
  CHECK(deep.points_used == 273);
  CHECK(deep.ratio == doctest::Approx(0.973364).epsilon(1e-4));

  // accuracy improves as the spectrum deepens
  CHECK(std::abs(deep.ratio - 1.0) < std::abs(mid.ratio - 1.0));
}

TEST_CASE("counting fit input validation") {
  const std::vector<double> two = {1.0, 2.0};
  CHECK_THROWS_AS(weyl_fit(std::vector<double>{}, 1.0), InsufficientSpectrum);
  CHECK_THROWS_AS(weyl_fit(two, 0.0), DegenerateParameters);
  CHECK_THROWS_AS(weyl_fit(two, -2.0), DegenerateParameters);
  // only one point lands in the upper-half window
  CHECK_THROWS_AS(weyl_fit(std::vector<double>{1.0, 100.0}, 1.0),
                  InsufficientSpectrum);
}
