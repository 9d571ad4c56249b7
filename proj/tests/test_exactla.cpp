#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "drumgeo/error.hpp"
#include "drumgeo/exact.hpp"

using namespace drumgeo;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()),
                static_cast<int>(rows.empty() ? 0 : rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  const ExactMatrix a = from_rows({{1, 2}, {3, 4}});
  const ExactMatrix b = from_rows({{0, 1}, {1, 0}});

  CHECK(a * ExactMatrix::identity(2) == a);
  CHECK(ExactMatrix::identity(2) * a == a);
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
  CHECK(Rational(2) * a == from_rows({{2, 4}, {6, 8}}));

  CHECK(a.is_integral());
  CHECK_FALSE(a.is_zero());
  CHECK(from_rows({{0, 0}, {0, 0}}).is_zero());

  ExactMatrix half(1, 1);
  half.at(0, 0) = Rational(1, 2);
  CHECK_FALSE(half.is_integral());
}

TEST_CASE("permutation matrices act on row vectors by pullback") {
  // images = (0 1 2) as an image row
  const ExactMatrix p = permutation_matrix({1, 2, 0});
  ExactMatrix x(1, 3);
  x.at(0, 0) = 10;
  x.at(0, 1) = 20;
  x.at(0, 2) = 30;

  // (x P)_j places entry i at column images[i]
  const ExactMatrix moved = x * p;
  CHECK(moved.at(0, 1) == 10);
  CHECK(moved.at(0, 2) == 20);
  CHECK(moved.at(0, 0) == 30);

  CHECK(determinant(p) == Rational(1));
  CHECK(determinant(permutation_matrix({1, 0, 2})) == Rational(-1));
}

TEST_CASE("determinants") {
  CHECK(determinant(ExactMatrix::identity(4)) == Rational(1));
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == Rational(0));

  SUBCASE("integer matrix with large intermediate values") {
    // Vandermonde on 1..5: det = prod_{i<j} (x_j - x_i) = 288
    ExactMatrix v(5, 5);
    for (int i = 0; i < 5; ++i) {
      Rational pw = 1;
      for (int j = 0; j < 5; ++j) {
        v.at(i, j) = pw;
        pw *= (i + 1);
      }
    }
    CHECK(determinant(v) == Rational(288));
  }

  SUBCASE("rational entries") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(1, 4);
    m.at(1, 1) = Rational(1, 5);
    CHECK(determinant(m) == Rational(1, 60));
  }

  SUBCASE("non-square input rejected") {
    CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), NotSquare);
  }

  SUBCASE("empty matrix has determinant one") {
    CHECK(determinant(ExactMatrix(0, 0)) == Rational(1));
  }
}

TEST_CASE("intertwiner basis of a single shared cycle") {
  // both sides act by the same 3-cycle; the commutant of a cyclic regular
  // action has one basis element per diagonal shift
  const std::vector<std::vector<int>> cyc = {{1, 2, 0}};
  const auto basis = intertwiner_basis(cyc, cyc);
  REQUIRE(basis.size() == 3);

  for (const auto& t : basis) {
    // each indicator really commutes with the action
    const ExactMatrix p = permutation_matrix(cyc[0]);
    CHECK(p * t == t * p);
    // entries are 0/1 and the blocks partition all nine cells
    CHECK(t.is_integral());
  }
  Rational total = 0;
  for (const auto& t : basis)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) total += t.at(i, j);
  CHECK(total == Rational(9));
}

TEST_CASE("intertwiner basis between inequivalent actions") {
  // left: trivial action on 2 points; right: swap. Glued cells form a single
  // component only across the swapped columns.
  const auto basis = intertwiner_basis({{0, 1}}, {{1, 0}});
  REQUIRE(basis.size() == 2);
  for (const auto& t : basis) {
    const ExactMatrix l = permutation_matrix({0, 1});
    const ExactMatrix r = permutation_matrix({1, 0});
    CHECK(l * t == t * r);
  }
}

TEST_CASE("invertible combination search") {
  SUBCASE("identity-containing basis succeeds immediately") {
    const auto basis = intertwiner_basis({{1, 2, 0}}, {{1, 2, 0}});
    const auto found = find_invertible_combination(basis);
    REQUIRE(found.has_value());
    CHECK(determinant(*found) != Rational(0));
  }

  SUBCASE("all-singular basis returns nothing") {
    // single basis element with a zero row: no combination is invertible
    std::vector<ExactMatrix> basis{from_rows({{1, 1}, {0, 0}})};
    CHECK_FALSE(find_invertible_combination(basis).has_value());
  }

  SUBCASE("deterministic for a fixed seed") {
    const auto basis = intertwiner_basis({{1, 2, 0}}, {{1, 2, 0}});
    const auto a = find_invertible_combination(basis, 12345);
    const auto b = find_invertible_combination(basis, 12345);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
  }
}

TEST_CASE("rational string round trips") {
  CHECK(rational_to_string(Rational(3)) == "3");
  CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
  CHECK(rational_from_string("3") == Rational(3));
  CHECK(rational_from_string("-6/4") == Rational(-3, 2));
  CHECK(rational_from_string("0/5") == Rational(0));
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string("abc"), Error);

  const Rational vals[] = {Rational(0), Rational(7, 3), Rational(-22, 7)};
  for (const Rational& r : vals)
    CHECK(rational_from_string(rational_to_string(r)) == r);
}
