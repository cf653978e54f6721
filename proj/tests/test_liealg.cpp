#include "wakimoto/liealg.hpp"

#include <doctest.h>

using namespace wakimoto;

namespace {

LieParams params(int n, int r, Rational g, Rational lam = 0) {
  return LieParams(n, r, g, std::vector<Rational>(n, lam));
}

RationalMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (auto row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("cartan matrix") {
  CHECK(cartan_matrix<int>(1) == Eigen::MatrixXi::Constant(1, 1, 2));
  Eigen::MatrixXi a2(2, 2);
  a2 << 2, -1, -1, 2;
  CHECK(cartan_matrix<int>(2) == a2);
  Eigen::MatrixXi a3(3, 3);
  a3 << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  CHECK(cartan_matrix<int>(3) == a3);
}

TEST_CASE("root pairing") {
  CHECK(root_pairing(1, {1, 2}) == 1);
  CHECK(root_pairing(1, {1, 1}) == 2);
  CHECK(root_pairing(3, {1, 2}) == -1);

  // Agrees with summing Cartan rows.
  for (int n = 1; n <= 5; ++n) {
    auto a = cartan_matrix<int>(n);
    for (Root rt : positive_roots(n))
      for (int i = 1; i <= n; ++i) {
        int sum = 0;
        for (int t = rt.k; t <= rt.l; ++t) sum += a(i - 1, t - 1);
        CHECK(root_pairing(i, rt) == sum);
        CHECK(weight_pairing(i, root_weight(n, rt)) == sum);
      }
  }
}

TEST_CASE("positive roots") {
  CHECK(positive_roots(1).size() == 1);
  CHECK(positive_roots(4).size() == 10);
  CHECK(levi_roots(0).empty());
  CHECK(levi_roots(3).size() == 6);
  for (Root rt : levi_roots(3)) CHECK(rt.in_levi(3));
}

TEST_CASE("b matrix") {
  CHECK(b_matrix(2, 1, 5) == from_rows({{10, -5}, {-5, 7}}));
  CHECK(b_matrix(1, 0, 3) == from_rows({{4}}));
  CHECK(b_matrix(1, 1, 5) == from_rows({{10}}));
  CHECK(params(2, 1, 5).gram(2, 2) == 7);

  // r = 0 gives (gamma^2 - 1) A_n, r = n gives gamma^2 A_n.
  for (int n = 1; n <= 4; ++n) {
    RationalMatrix a = cartan_matrix<Rational>(n);
    CHECK(b_matrix(n, 0, Rational(7, 2)) == (a * Rational(5, 2)).eval());
    CHECK(b_matrix(n, n, 3) == (a * Rational(3)).eval());
  }
  CHECK(b_matrix(params(3, 2, Rational(1, 3))) == b_matrix(3, 2, Rational(1, 3)));
}

TEST_CASE("central charge") {
  CHECK(central_charge(params(1, 1, 4)) == 2);
  CHECK(central_charge(params(2, 2, 3)) == 0);
  CHECK(params(2, 2, 3).is_level_zero());
  CHECK(central_charge(params(1, 0, Rational(7, 2))) == Rational(5, 2));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(LieParams(0, 0, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(LieParams(2, 3, 1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(LieParams(2, -1, 1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(LieParams(2, 1, 0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(LieParams(2, 1, 1, {0}), std::invalid_argument);
}

TEST_CASE("annihilation profile") {
  SUBCASE("n=1 r=0") {
    auto pr = expected_annihilation_profile(params(1, 0, 3, 1));
    CHECK(pr.kills(Generator::E, 1) == ModeSet::all());
    CHECK(pr.kills(Generator::F, 1) == ModeSet::none());
    CHECK(pr.kills(Generator::H, 1) == ModeSet::at_least(1));
    CHECK(pr.central == 2);
  }
  SUBCASE("n=1 r=1") {
    auto pr = expected_annihilation_profile(params(1, 1, 3, 1));
    CHECK(pr.kills(Generator::F, 1) == ModeSet::at_least(0));
    CHECK(pr.kills(Generator::E, 1) == ModeSet::at_least(1));
    CHECK(pr.kills(Generator::H, 1) == ModeSet::at_least(1));
    CHECK(pr.cartan_eigenvalues == std::vector<Rational>{1});
  }
  SUBCASE("n=2 r=1") {
    auto pr = expected_annihilation_profile(params(2, 1, 3, 1));
    CHECK(pr.kills(Generator::E, 1) == ModeSet::at_least(1));
    CHECK(pr.kills(Generator::F, 1) == ModeSet::at_least(0));
    CHECK(pr.kills(Generator::E, 2) == ModeSet::all());
    CHECK(pr.kills(Generator::F, 2) == ModeSet::none());
  }
  SUBCASE("lambda_i = 0 lets E_{i,0} kill") {
    auto pr = expected_annihilation_profile(params(1, 1, 3, 0));
    CHECK(pr.kills(Generator::E, 1) == ModeSet::at_least(0));
  }
  SUBCASE("literal Borel") {
    auto pr = literal_borel_profile(params(2, 1, 3, 1));
    CHECK(pr.kills(Generator::E, 1) == ModeSet::at_least(0));
    CHECK(pr.kills(Generator::F, 1) == ModeSet::at_least(1));
    CHECK(pr.kills(Generator::E, 2) == ModeSet::all());
  }
  CHECK(ModeSet::at_least(2).describe() == "m>=2");
  CHECK(ModeSet::none().describe() == "none");
  CHECK(ModeSet::all().contains(-100));
}

TEST_CASE("graded monomial counts") {
  std::vector<GradedGenerator> gens{{"f", 1, Weight::Constant(1, -1)},
                                    {"h", 1, Weight::Constant(1, 0)}};
  auto dims = count_graded_monomials(gens, {0, 2}, 2);
  CHECK(dims.at({0, {0}}) == 1);
  CHECK(dims.at({1, {-1}}) == 1);
  CHECK(dims.at({1, {0}}) == 1);
  CHECK(dims.at({2, {-2}}) == 1);
  CHECK(dims.at({2, {-1}}) == 1);
  CHECK(dims.at({2, {0}}) == 1);
}

TEST_CASE("pbw dims") {
  // n=1 r=0: f (x) t^m for all m, h (x) t^m for m <= -1.
  auto dims = pbw_graded_dims(params(1, 0, 3, 1), {-3, 3}, 1);
  CHECK(dims.at({0, {0}}) == 1);
  for (int e = -3; e <= 3; ++e) CHECK(dims.at({e, {-1}}) == 1);
  CHECK(dims.at({1, {0}}) == 1);
  CHECK(dims.count({-1, {0}}) == 0);

  // n=1 r=1, depth 1: h (x) t^{-1} alone at (1, 0).
  auto d11 = pbw_graded_dims(params(1, 1, 3, 1), {-3, 3}, 1);
  CHECK(d11.at({1, {0}}) == 1);
}

TEST_CASE("root combinatorics identities") {
  for (int r = 1; r <= 4; ++r) {
    const int n = r + 1;
    for (int j = 1; j <= r; ++j) {
      Weight sum = Weight::Zero(n);
      for (Root a : levi_roots(r)) sum += root_pairing(j, a) * root_weight(n, a);
      CHECK(sum == (r + 1) * simple_root(n, j));
    }
    int sq = 0;
    for (Root a : levi_roots(r)) sq += root_pairing(r + 1, a) * root_pairing(r + 1, a);
    CHECK(sq == r);
  }
}
