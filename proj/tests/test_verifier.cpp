#include "wakimoto/lemma_catalog.hpp"
#include "wakimoto/verifier.hpp"

#include <doctest.h>

#include <set>

using namespace wakimoto;

namespace {

LieParams params(int n, int r, Rational g, Rational lam = 1) {
  return LieParams(n, r, g, std::vector<Rational>(n, lam));
}

CheckSpec spec(std::string id, std::vector<LieParams> grid, int vectors = 4) {
  CheckSpec s;
  s.id = std::move(id);
  s.grid = std::move(grid);
  s.num_vectors = vectors;
  return s;
}

}  // namespace

TEST_CASE("random test vectors") {
  auto p = params(2, 1, 5);
  auto one = random_test_vectors(1, 1, 3, 2, p);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == vacuum());
  CHECK(random_test_vectors(7, 10, 3, 2, p) == random_test_vectors(7, 10, 3, 2, p));
  CHECK(random_test_vectors(7, 10, 3, 2, p) != random_test_vectors(8, 10, 3, 2, p));

  auto vs = random_test_vectors(2, 3, 2, 2, p);
  REQUIRE(vs.size() == 3);
  for (const auto& v : vs) {
    CHECK_FALSE(v.is_zero());
    CHECK(v.max_degree() <= 2);
    for (const auto& var : v.variables()) {
      CHECK(is_valid(var, 2));
      CHECK(std::abs(var.mode()) <= 2);
    }
  }
}

TEST_CASE("default grid") {
  auto g1 = default_grid(1);
  CHECK(g1.size() == 28);
  CHECK(g1 == default_grid(1));
  std::set<std::pair<int, int>> shapes;
  for (const auto& p : g1) shapes.insert({p.n(), p.r()});
  CHECK(shapes.size() == 7);
  CHECK(shapes.count({1, 0}) == 1);
  CHECK(shapes.count({1, 1}) == 1);
}

TEST_CASE("heisenberg check") {
  auto reps = check_heisenberg(spec("HEIS", {params(2, 1, 5), params(1, 0, 3)}));
  REQUIRE(reps.size() == 2);
  for (const auto& r : reps) {
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.instances > 0);
  }
}

TEST_CASE("relation examples pass") {
  for (const char* id : {"R1", "R4"}) {
    auto reps = check_relation(spec(id, {params(1, 1, 5, Rational(2, 3))}));
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].verdict == Verdict::Pass);
  }
  auto r5 = check_relation(spec("R5", {params(3, 1, 2, 0)}, 2));
  CHECK(r5[0].verdict == Verdict::Pass);
  CHECK(relation_ids().size() == 7);
}

TEST_CASE("lemma examples pass") {
  for (const char* id : {"PRELIM.1", "COLLECTION.1", "PRELIM2.l"}) {
    auto reps = check_lemma(spec(id, {params(2, 1, 3)}, 3));
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].verdict == Verdict::Pass);
    CHECK_FALSE(reps[0].authoritative);
  }
  CHECK(lemma_ids().size() == 22);
}

TEST_CASE("a false identity is detected") {
  // A deliberately false identity: [H_1(z), a_11(w)] = 0.
  auto p = params(1, 1, 5);
  LemmaInstance inst;
  inst.label = "false";
  inst.x = build_current(CurrentKind::H, 1, p);
  inst.y = single_field(FieldFactor::a(1, 1));
  inst.wx = 1;
  inst.wy = 1;
  FockVector lhs = mode_bracket_apply(inst.x, 0, inst.y, -1, vacuum(), p);
  CHECK_FALSE(lhs == rhs_mode_apply(inst.rhs, 0, -1, vacuum(), p));
}

TEST_CASE("highest weight") {
  auto r0 = check_highest_weight(params(1, 0, 3, 2), 3);
  CHECK(r0.verdict == Verdict::Pass);
  bool literal_true = false;
  for (const auto& n : r0.notes)
    if (n == "literal Borel annihilates vacuum: true") literal_true = true;
  CHECK(literal_true);

  auto r1 = check_highest_weight(params(1, 1, 3, 2), 3);
  CHECK(r1.verdict == Verdict::Pass);
  bool literal_false = false;
  for (const auto& n : r1.notes)
    if (n == "literal Borel annihilates vacuum: false") literal_false = true;
  CHECK(literal_false);
}

TEST_CASE("character") {
  for (auto p : {params(1, 0, 3), params(1, 1, 3), params(2, 1, 5)}) {
    auto rep = check_character(p, {-3, 3}, 3);
    CHECK(rep.verdict == Verdict::Pass);
  }
}
