#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "wrzero/ratmat.hpp"

using namespace wrzero;
using testutil::ratmat;
using testutil::ratvec;

TEST_CASE("rational string round trips") {
  CHECK(to_string(rational_from_string("55/2")) == "55/2");
  CHECK(to_string(rational_from_string("-12")) == "-12");
  CHECK(to_string(rational_from_string("0.5")) == "1/2");
  CHECK(to_string(rational_from_string("12.25")) == "49/4");
  CHECK(to_string(rational_from_string("4/6")) == "2/3");
  CHECK(to_string(rational_from_string("-0.1")) == "-1/10");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("kernel of the identity is trivial") {
  CHECK(kernel_basis(ratmat({{"1", "0"}, {"0", "1"}})).empty());
}

TEST_CASE("kernel of a single row") {
  const auto basis = kernel_basis(ratmat({{"1", "1"}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == ratvec({"1", "-1"}));
}

TEST_CASE("kernel of the triangle system's net matrix") {
  const RatMatrix w = ratmat({{"-12", "0", "1"}, {"14", "-4", "8"}, {"10", "4", "-10"}});
  const auto basis = kernel_basis(w);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == ratvec({"2", "55", "24"}));
  CHECK(rank(w) == 2);
}

TEST_CASE("rank examples") {
  CHECK(rank(ratmat({{"1", "0"}, {"0", "1"}})) == 2);
  CHECK(rank(ratmat({{"1", "2"}, {"2", "4"}})) == 1);
  CHECK(rank(RatMatrix::Zero(3, 3)) == 0);
}

TEST_CASE("solve against two edge directions") {
  // Columns are the two edge vectors out of (1,0,0) toward (0,2,0), (0,0,2).
  const RatMatrix m = ratmat({{"-1", "-1"}, {"2", "0"}, {"0", "2"}});

  SUBCASE("net direction inside the cone") {
    const auto sol = solve_exact(m, ratvec({"-12", "14", "10"}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == ratvec({"7", "5"}));
    CHECK(sol->kernel.empty());
  }
  SUBCASE("net direction with a negative coordinate in the basis") {
    const auto sol = solve_exact(m, ratvec({"-1/2", "-2", "3"}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == ratvec({"-1", "3/2"}));
    CHECK(sol->kernel.empty());
  }
  SUBCASE("inconsistent right-hand side") {
    CHECK_FALSE(solve_exact(m, ratvec({"1", "0", "0"})).has_value());
  }
}

TEST_CASE("primitive integer scaling") {
  CHECK(primitive_integer(ratvec({"1/12", "55/24", "1"})) == ratvec({"2", "55", "24"}));
  CHECK(primitive_integer(ratvec({"-2", "4"})) == ratvec({"1", "-2"}));
  CHECK(primitive_integer(ratvec({"0", "0"})) == ratvec({"0", "0"}));
}

TEST_CASE("kernel vectors satisfy m v = 0 exactly and rank is complementary") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int rows = dim(rng);
    const int cols = dim(rng);
    const RatMatrix m = testutil::random_matrix(rng, rows, cols);

    const auto basis = kernel_basis(m);
    CHECK(rank(m) + static_cast<Eigen::Index>(basis.size()) == cols);
    for (const RatVector& v : basis) {
      const RatVector product = m * v;
      for (Eigen::Index i = 0; i < product.size(); ++i) CHECK(product(i) == 0);
      // Primitive integer form with positive leading entry.
      Integer g = 0;
      Eigen::Index lead = -1;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        CHECK(v(i).get_den() == 1);
        g = gcd(g, v(i).get_num());
        if (lead < 0 && v(i) != 0) lead = i;
      }
      REQUIRE(lead >= 0);
      CHECK(v(lead) > 0);
      CHECK(g == 1);
    }
  }
}

TEST_CASE("solve_exact solutions check out and inconsistency matches rank test") {
  std::mt19937_64 rng(907);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    const int rows = dim(rng);
    const int cols = dim(rng);
    const RatMatrix m = testutil::random_matrix(rng, rows, cols);
    RatVector b(rows);
    for (int i = 0; i < rows; ++i) b(i) = testutil::random_rational(rng, 5, 3, true);

    RatMatrix aug(rows, cols + 1);
    aug.leftCols(cols) = m;
    aug.col(cols) = b;
    const bool solvable = rank(aug) == rank(m);

    const auto sol = solve_exact(m, b);
    CHECK(sol.has_value() == solvable);
    if (sol) {
      const RatVector residual = m * sol->particular - b;
      for (Eigen::Index i = 0; i < residual.size(); ++i) CHECK(residual(i) == 0);
    }
  }
}

TEST_CASE("kernel computation is deterministic") {
  std::mt19937_64 rng(11);
  const RatMatrix m = testutil::random_matrix(rng, 4, 6);
  const auto first = kernel_basis(m);
  const auto second = kernel_basis(m);
  REQUIRE(first.size() == second.size());
  for (size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}
