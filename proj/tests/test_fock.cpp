#include "wakimoto/fock.hpp"

#include <doctest.h>

using namespace wakimoto;

namespace {

FockVector var(Variable v, Rational c = 1) { return FockVector::basis(Monomial({{v, 1}}), c); }

LieParams params(int n, int r) { return LieParams(n, r, 3, std::vector<Rational>(n, 0)); }

}  // namespace

TEST_CASE("vacuum arithmetic") {
  CHECK(vacuum().coefficient(Monomial()) == 1);
  CHECK(vacuum().size() == 1);
  CHECK((vacuum() + vacuum()).coefficient(Monomial()) == 2);
  CHECK((vacuum() - vacuum()).is_zero());
  CHECK((vacuum() - vacuum()).terms().empty());
}

TEST_CASE("add_scaled") {
  CHECK(add_scaled(FockVector(), 5, vacuum()) == FockVector::basis(Monomial(), 5));
  auto x = var(Variable::x(1, 1, 0));
  CHECK(add_scaled(x, -1, x).is_zero());
  auto half = FockVector::basis(Monomial(), Rational(1, 2));
  CHECK(add_scaled(half, Rational(1, 3), half) == FockVector::basis(Monomial(), Rational(2, 3)));
}

TEST_CASE("monomials are canonical") {
  auto a = Variable::x(1, 2, -1);
  auto b = Variable::y(2, 3);
  Monomial m1({{b, 1}, {a, 2}});
  Monomial m2({{a, 1}, {b, 1}, {a, 1}});
  CHECK(m1 == m2);
  CHECK(m1.degree() == 3);
  CHECK(m1.exponent(a) == 2);
  CHECK(m1.divided(a).exponent(a) == 1);
  CHECK(m1.to_string() == "x[1,2,-1]^2*y[2,3]");
  CHECK(Monomial().to_string() == "1");
}

TEST_CASE("variables") {
  CHECK(Variable::x(2, 3, -7).i() == 2);
  CHECK(Variable::x(2, 3, -7).j() == 3);
  CHECK(Variable::x(2, 3, -7).mode() == -7);
  CHECK(Variable::y(1, 4).family() == Family::Y);
  CHECK(is_valid(Variable::x(1, 2, 0), 2));
  CHECK_FALSE(is_valid(Variable::x(2, 1, 0), 2));
  CHECK_FALSE(is_valid(Variable::x(1, 3, 0), 2));
  CHECK_FALSE(is_valid(Variable::y(1, 0), 2));
  CHECK(Variable::x(1, 1, 0) < Variable::y(1, 1));
}

TEST_CASE("derivative and multiplication") {
  auto x = Variable::x(1, 1, 0);
  auto v = var(x).times_variable(x).times_variable(x);  // x^3
  CHECK(v.derivative(x) == FockVector::basis(Monomial({{x, 2}}), 3));
  CHECK(vacuum().derivative(x).is_zero());
  CHECK(v.max_degree() == 3);
  CHECK(v.variables() == std::set<Variable>{x});
}

TEST_CASE("to_string") {
  CHECK(FockVector().to_string() == "0");
  auto v = vacuum() + var(Variable::y(1, 1), Rational(-1, 2));
  CHECK(v.to_string() == "1/1 + -1/2*y[1,1]");
}

TEST_CASE("bigrade") {
  auto p = params(1, 1);
  // a-created: x_{11,-2} at energy 2, weight -alpha_1.
  auto g1 = bigrade(Variable::x(1, 1, -2), p);
  CHECK(g1.energy == 2);
  CHECK(g1.weight == Weight::Constant(1, -1));
  // a*-created: a*_{11,-1} produces x_{11,1}; the mode -1 creator raises energy by 1.
  auto g2 = bigrade(Variable::x(1, 1, 1), p);
  CHECK(is_astar_created(Variable::x(1, 1, 1), 1));
  CHECK(g2.energy == 1);
  CHECK(g2.weight == Weight::Constant(1, 1));
  auto g3 = bigrade(Variable::y(1, 3), p);
  CHECK(g3.energy == 3);
  CHECK(g3.weight == Weight::Zero(1));

  // j > r: every x is a-created.
  auto p0 = params(1, 0);
  CHECK_FALSE(is_astar_created(Variable::x(1, 1, 1), 0));
  CHECK(bigrade(Variable::x(1, 1, 1), p0).energy == -1);

  // Additive over monomials.
  Monomial m({{Variable::x(1, 1, -2), 1}, {Variable::x(1, 1, 1), 2}, {Variable::y(1, 3), 1}});
  auto g = bigrade(m, p);
  CHECK(g.energy == 2 + 2 + 3);
  CHECK(g.weight == Weight::Constant(1, 1));
}
