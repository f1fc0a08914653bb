#include <set>

#include "doctest.h"
#include "doob/search.hpp"

using namespace doob;

TEST_CASE("exact cover: simple instances") {
  ExactCoverInstance inst;
  inst.universe = 4;
  inst.sets = {{0, 1}, {2, 3}, {1, 2}, {0, 3}, {0, 1, 2, 3}};

  ExactCoverResult r = exact_cover(inst);
  REQUIRE(r.status == SearchStatus::Found);
  std::vector<int> cover(4, 0);
  for (uint32_t s : r.selected)
    for (uint32_t e : inst.sets[s]) ++cover[e];
  CHECK(cover == std::vector<int>{1, 1, 1, 1});

  inst.mu = 2;
  r = exact_cover(inst);
  REQUIRE(r.status == SearchStatus::Found);
  cover.assign(4, 0);
  for (uint32_t s : r.selected)
    for (uint32_t e : inst.sets[s]) ++cover[e];
  CHECK(cover == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("exact cover: unsatisfiable and degenerate cases") {
  ExactCoverInstance inst;
  inst.universe = 3;
  inst.sets = {{0, 1}, {1, 2}}; // element 1 forces overlap
  CHECK(exact_cover(inst).status == SearchStatus::Unsatisfiable);

  inst.sets = {{0}, {1}}; // element 2 uncoverable
  CHECK(exact_cover(inst).status == SearchStatus::Unsatisfiable);

  inst.universe = 0;
  inst.sets = {};
  CHECK(exact_cover(inst).status == SearchStatus::Found);

  inst.universe = 2;
  inst.sets = {{0, 2}};
  CHECK_THROWS_AS(exact_cover(inst), std::invalid_argument); // out of universe
  inst.sets = {{}};
  CHECK_THROWS_AS(exact_cover(inst), std::invalid_argument); // empty subset
}

TEST_CASE("exact cover: determinism per seed") {
  ExactCoverInstance inst;
  inst.universe = 6;
  inst.sets = {{0, 1}, {2, 3}, {4, 5}, {1, 2}, {3, 4}, {5, 0}, {0, 1, 2}, {3, 4, 5}};
  SearchBudget b;
  b.seed = 42;
  auto r1 = exact_cover(inst, b);
  auto r2 = exact_cover(inst, b);
  REQUIRE(r1.status == SearchStatus::Found);
  CHECK(r1.selected == r2.selected);
}

TEST_CASE("exact cover: budget exhaustion is reported") {
  // A contradiction that needs some search to discover, with a 1-node budget.
  ExactCoverInstance inst;
  inst.universe = 8;
  inst.sets = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}};
  SearchBudget tiny;
  tiny.node_limit = 1;
  auto r = exact_cover(inst, tiny);
  CHECK((r.status == SearchStatus::BudgetExhausted ||
         r.status == SearchStatus::Unsatisfiable));
}

TEST_CASE("find_perfect_code: arithmetic rejections") {
  // N*mu not divisible by the ball size: diameters 2,3,4.
  CHECK(find_perfect_code(GraphSpec{1, 0}, 1).status == SearchStatus::Unsatisfiable);
  CHECK(find_perfect_code(GraphSpec{0, 2}, 1).status == SearchStatus::Unsatisfiable);
  CHECK(find_perfect_code(GraphSpec{1, 1}, 1).status == SearchStatus::Unsatisfiable);
  CHECK(find_perfect_code(GraphSpec{0, 3}, 1).status == SearchStatus::Unsatisfiable);
  CHECK(find_perfect_code(GraphSpec{2, 0}, 1).status == SearchStatus::Unsatisfiable);
  CHECK(find_perfect_code(GraphSpec{0, 4}, 1).status == SearchStatus::Unsatisfiable);
}

TEST_CASE("find_perfect_code: small positive cases") {
  // K4: any single vertex is 1-perfect.
  auto r = find_perfect_code(GraphSpec{0, 1}, 1);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.code->size() == 1);
  // mu equal to the ball size: the whole vertex set.
  r = find_perfect_code(GraphSpec{0, 2}, 7);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(is_mu_fold_perfect(*r.code, 7));
}

TEST_CASE("additive 1-perfect codes at diameter 5") {
  for (const auto& s : {GraphSpec{2, 1}, GraphSpec{1, 3}}) {
    AdditiveCodeResult r = find_additive_perfect_code(s);
    REQUIRE(r.found);
    REQUIRE(r.cosets.size() == 16);
    CHECK(r.code->contains(0)); // the kernel contains the identity
    uint64_t total = 0;
    for (size_t i = 0; i < 16; ++i) {
      REQUIRE(is_mu_fold_perfect(r.cosets[i], 1));
      CHECK(r.cosets[i].size() == 64);
      total += r.cosets[i].size();
      for (size_t j = i + 1; j < 16; ++j)
        REQUIRE(r.cosets[i].disjoint_with(r.cosets[j]));
    }
    CHECK(total == num_vertices(s)); // disjoint + sizes => cover
  }
  CHECK_THROWS_AS(find_additive_perfect_code(GraphSpec{1, 1}), std::invalid_argument);
}

TEST_CASE("find_perfect_coloring against a known quotient") {
  GraphSpec s{0, 2};
  QuotientMatrix S = plus_diag(j_minus_e(4), 3);
  auto r = find_perfect_coloring(s, S);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(verify_quotient(*r.coloring, S).ok());

  // No proper 2-coloring: H(2,4) has triangles.
  QuotientMatrix bip(2);
  bip.at(0, 1) = bip.at(1, 0) = 6;
  CHECK(find_perfect_coloring(s, bip).status == SearchStatus::Unsatisfiable);
}

TEST_CASE("find_perfect_coloring honors constraints") {
  GraphSpec s{0, 2};
  QuotientMatrix S = plus_diag(j_minus_e(4), 3);
  ColoringConstraints cons;
  cons.fixed = {{0, 2}, {5, 1}};
  auto r = find_perfect_coloring(s, S, cons);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.coloring->colors[0] == 2);
  CHECK(r.coloring->colors[5] == 1);
}

TEST_CASE("bfs_distance basic sanity") {
  GraphSpec s{1, 1};
  CHECK(bfs_distance(s, 0, 0) == 0);
  CHECK(bfs_distance(s, 0, 1) == 1);
  int maxd = 0;
  for (uint64_t v = 0; v < num_vertices(s); ++v)
    maxd = std::max(maxd, bfs_distance(s, 0, v));
  CHECK(maxd == 3);
}
