#include "wakimoto/oscillator.hpp"

#include <doctest.h>

using namespace wakimoto;

namespace {

LieParams params(int n, int r, Rational g = 5) {
  std::vector<Rational> lam;
  for (int i = 1; i <= n; ++i) lam.push_back(i + 1);
  return LieParams(n, r, g, lam);
}

FockVector var(Variable v) { return FockVector::basis(Monomial({{v, 1}})); }

}  // namespace

TEST_CASE("annihilation classification") {
  CHECK(is_annihilation(BasicOp::a(1, 1, 0), params(1, 1)));
  CHECK_FALSE(is_annihilation(BasicOp::a(1, 2, 5), params(2, 1)));
  CHECK(is_creation(BasicOp::a(1, 2, 5), params(2, 1)));
  CHECK(is_annihilation(BasicOp::astar(1, 2, -3), params(2, 1)));
  CHECK(is_annihilation(BasicOp::astar(1, 1, 1), params(1, 1)));
  CHECK(is_creation(BasicOp::astar(1, 1, 0), params(1, 1)));
  CHECK_FALSE(is_annihilation(BasicOp::b(1, 0), params(1, 1)));
  CHECK_FALSE(is_creation(BasicOp::b(1, 0), params(1, 1)));
  CHECK(is_creation(BasicOp::b(1, -1), params(1, 1)));
  CHECK(is_annihilation(BasicOp::b(1, 1), params(1, 1)));
}

TEST_CASE("apply_basic") {
  auto p = params(2, 1);
  CHECK(apply_basic(BasicOp::a(1, 1, -2), vacuum(), p) == var(Variable::x(1, 1, -2)));
  auto y = apply_basic(BasicOp::b(1, -3), vacuum(), p);
  CHECK(y == var(Variable::y(1, 3)));
  CHECK(apply_basic(BasicOp::b(2, 3), y, p) == vacuum().scaled(3 * p.gram(2, 1)));
  CHECK(apply_basic(BasicOp::astar(1, 2, 4), vacuum(), p).is_zero());
  CHECK(apply_basic(BasicOp::b(2, 0), vacuum(), p) == vacuum().scaled(3));
  CHECK(apply_basic(BasicOp::astar(1, 1, -1), vacuum(), p) == var(Variable::x(1, 1, 1)));
  // a*_{ij,m} for j > r is -d/dx_{ij,-m}.
  CHECK(apply_basic(BasicOp::astar(1, 2, 4), var(Variable::x(1, 2, -4)), p) ==
        vacuum().scaled(-1));
  CHECK_THROWS_AS(apply_basic(BasicOp::a(1, 3, 0), vacuum(), p), std::invalid_argument);
  CHECK_THROWS_AS(apply_basic(BasicOp::b(3, 0), vacuum(), p), std::invalid_argument);
}

// [u, v] w = u(v w) - v(u w).
FockVector commutator(BasicOp u, BasicOp v, const FockVector& w, const LieParams& p) {
  return apply_basic(u, apply_basic(v, w, p), p) - apply_basic(v, apply_basic(u, w, p), p);
}

TEST_CASE("canonical commutation relations") {
  for (int r = 0; r <= 2; ++r) {
    auto p = params(2, r);
    FockVector w = vacuum();
    w.add_term(Monomial({{Variable::x(1, 2, 1), 1}, {Variable::x(1, 1, -1), 2}}), 3);
    w.add_term(Monomial({{Variable::y(1, 2), 1}, {Variable::x(2, 2, 0), 1}}), -1);
    for (Root a : positive_roots(2))
      for (Root b : positive_roots(2))
        for (int m = -2; m <= 2; ++m)
          for (int q = -2; q <= 2; ++q) {
            auto c = commutator(BasicOp::a(a.k, a.l, m), BasicOp::astar(b.k, b.l, q), w, p);
            Rational expect = (a == b && m + q == 0) ? 1 : 0;
            CHECK(c == w.scaled(expect));
            CHECK(commutator(BasicOp::a(a.k, a.l, m), BasicOp::a(b.k, b.l, q), w, p).is_zero());
          }
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int m = -2; m <= 2; ++m)
          for (int q = -2; q <= 2; ++q) {
            auto c = commutator(BasicOp::b(i, m), BasicOp::b(j, q), w, p);
            Rational expect = m + q == 0 ? m * p.gram(i, j) : Rational(0);
            CHECK(c == w.scaled(expect));
          }
  }
}

TEST_CASE("contraction class") {
  auto p = params(2, 1);
  auto c1 = contraction_class({OscKind::A, {1, 1}}, {OscKind::AStar, {1, 1}}, p);
  CHECK(c1.tag == ContractionTag::IotaZW);
  CHECK(c1.multiplier == 1);
  auto c2 = contraction_class({OscKind::AStar, {1, 2}}, {OscKind::A, {1, 2}}, p);
  CHECK(c2.tag == ContractionTag::MinusDelta);
  CHECK(c2.multiplier == 1);
  auto c3 = contraction_class({OscKind::A, {1, 1}}, {OscKind::A, {1, 1}}, p);
  CHECK(c3.tag == ContractionTag::Zero);
  auto c4 = contraction_class({OscKind::AStar, {1, 1}}, {OscKind::A, {1, 1}}, p);
  CHECK(c4.tag == ContractionTag::IotaWZ);
  auto c5 = contraction_class({OscKind::A, {1, 2}}, {OscKind::AStar, {1, 2}}, p);
  CHECK(c5.tag == ContractionTag::Zero);
  auto c6 = contraction_class({OscKind::A, {1, 1}}, {OscKind::AStar, {2, 2}}, p);
  CHECK(c6.tag == ContractionTag::Zero);
  CHECK(std::string(to_string(ContractionTag::MinusDelta)) == "MINUS_DELTA");
  CHECK_THROWS(contraction_class({OscKind::B, {1, 1}}, {OscKind::A, {1, 1}}, p));
}
