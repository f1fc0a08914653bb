#include <numeric>
#include <set>

#include "doctest.h"
#include "doob/constructions.hpp"
#include "doob/gf.hpp"

using namespace doob;

namespace {

// Z4 word of a vertex of H(n,4) in canonical digit order.
std::vector<int> word_of(const GraphSpec& s, uint64_t v) {
  std::vector<int> w(static_cast<size_t>(s.n));
  for (int j = 0; j < s.n; ++j) w[static_cast<size_t>(j)] = static_cast<int>((v >> k4_shift(s, j)) & 3);
  return w;
}

} // namespace

TEST_CASE("product index plumbing") {
  GraphSpec a{1, 1}, b{0, 2};
  GraphSpec p = product_spec(a, b);
  CHECK(p == GraphSpec{1, 3});
  for (uint64_t x = 0; x < num_vertices(a); x += 7)
    for (uint64_t y = 0; y < num_vertices(b); y += 3) {
      auto [bx, by] = product_split(a, b, product_index(a, b, x, y));
      REQUIRE(bx == x);
      REQUIRE(by == y);
    }
}

TEST_CASE("mds partition: 4 disjoint 2-MDS codes, quotient (2m+n)(J-E)") {
  for (const auto& s : {GraphSpec{1, 1}, GraphSpec{0, 3}, GraphSpec{2, 0}}) {
    MdsPartition p = mds_partition(s);
    QuotientResult r = compute_quotient(p.coloring);
    REQUIRE(r.ok());
    CHECK(*r.matrix == j_minus_e(4, diameter_param(s)));
    uint64_t N = num_vertices(s);
    for (const auto& c : p.codes) {
      CHECK(c.size() == N / 4);
      CHECK(code_distance(c) == 2);
    }
    // Color = GF(4) sum of coordinate labels (spot check a few vertices).
    for (uint64_t v = 0; v < N; v += 5) {
      int sum = 0;
      uint64_t x = v;
      for (int j = 0; j < s.n; ++j) {
        sum = gf4_add(sum, gf4_of_z4(static_cast<int>(x & 3)));
        x >>= 2;
      }
      for (int i = 0; i < s.m; ++i) {
        sum = gf4_add(sum, shrikhande_label_packed(static_cast<int>(x & 15)));
        x >>= 4;
      }
      REQUIRE(p.coloring.colors[v] == sum + 1);
    }
  }
}

TEST_CASE("extend keeps the quotient and adds a diagonal") {
  MdsPartition p = mds_partition(GraphSpec{0, 2});
  Coloring e = extend(p.coloring, 1, 0);
  CHECK(e.spec == GraphSpec{1, 2});
  QuotientResult r = compute_quotient(e);
  REQUIRE(r.ok());
  CHECK(*r.matrix == plus_diag(j_minus_e(4, 2), 6));
  CHECK_THROWS_AS(extend(p.coloring, 0, 0), std::invalid_argument);
}

TEST_CASE("Hamming codes") {
  Code h1 = hamming_one_perfect(1);
  CHECK(h1.spec == GraphSpec{0, 1});
  CHECK(h1.size() == 1);
  CHECK(is_mu_fold_perfect(h1, 1));

  Code h2 = hamming_one_perfect(2);
  CHECK(h2.spec == GraphSpec{0, 5});
  CHECK(h2.size() == 64);
  CHECK(is_mu_fold_perfect(h2, 1));
  CHECK(code_distance(h2) == 3);
  CHECK(covering_radius(h2) == 1);
  // Completely regular with the 1-perfect intersection array.
  CrcResult crc = completely_regular_check(h2);
  REQUIRE(crc.ok());
  CHECK(crc.array->values == std::vector<int>{15, 1});
}

TEST_CASE("perfect code partitions at diameters 1 and 5") {
  CodePartition p1 = perfect_code_partition(GraphSpec{0, 1});
  CHECK(p1.codes.size() == 4);
  for (const auto& c : p1.codes) CHECK(c.size() == 1);

  for (const auto& s : {GraphSpec{0, 5}, GraphSpec{1, 3}, GraphSpec{2, 1}}) {
    CodePartition p = perfect_code_partition(s);
    REQUIRE(p.codes.size() == 16);
    QuotientResult r = compute_quotient(p.coloring);
    REQUIRE(r.ok());
    CHECK(*r.matrix == j_minus_e(16));
    for (size_t i = 0; i < p.codes.size(); ++i) {
      CHECK(p.codes[i].size() == 64);
      REQUIRE(is_mu_fold_perfect(p.codes[i], 1));
      for (size_t j = i + 1; j < p.codes.size(); ++j)
        REQUIRE(p.codes[i].disjoint_with(p.codes[j]));
    }
  }
  CHECK_THROWS_AS(perfect_code_partition(GraphSpec{1, 1}), NotAdmissible);
  CHECK_THROWS_AS(perfect_code_partition(GraphSpec{7, 7}), DeskScaleExceeded);
}

TEST_CASE("D(4,0) sum fibers split into distance-3 classes") {
  D40Partition p = d40_partition(0x0);
  CHECK(p.code.size() == 4096);
  uint64_t total = 0;
  for (const auto& part : p.parts) {
    CHECK(part.size() == 1024);
    total += part.size();
    CHECK(code_distance(part) >= 3);
  }
  CHECK(total == p.code.size());
  // A different fiber is a translate with the same sizes.
  D40Partition q = d40_partition(0x5);
  CHECK(q.code.size() == 4096);
  CHECK(q.code.disjoint_with(p.code));
}

TEST_CASE("MDS distance-3 partition over GF(2^k)") {
  for (int k : {2, 3}) {
    Mds3Partition p = mds_distance3_partition(k);
    int n = 1 << k;
    CHECK(p.spec == GraphSpec{0, n});
    REQUIRE(static_cast<int>(p.codes.size()) == n);
    uint64_t total = 0;
    for (const auto& c : p.codes) {
      CHECK(c.size() > 0);
      CHECK(code_distance(c) >= 3);
      total += c.size();
    }
    CHECK(total == num_vertices(p.spec) / 4); // union is a 2-MDS code
    // part_of agrees with the materialized codes.
    for (uint64_t v = 0; v < num_vertices(p.spec); v += 17) {
      int part = p.part_of(word_of(p.spec, v));
      if (part == 0) {
        for (const auto& c : p.codes) REQUIRE(!c.contains(v));
      } else {
        REQUIRE(p.codes[static_cast<size_t>(part - 1)].contains(v));
      }
    }
  }
  // k = 4 stays word-level but the function is still total.
  Mds3Partition p4 = mds_distance3_partition(4);
  CHECK(p4.codes.empty());
  CHECK(p4.part_of(std::vector<int>(16, 0)) >= 1);
}

TEST_CASE("multipartite colorings") {
  for (const auto& s : {GraphSpec{2, 0}, GraphSpec{1, 2}, GraphSpec{0, 4}}) {
    MultipartiteColoring mp = multipartite(2, s);
    CHECK(mp.coloring.k == 16);
    QuotientResult r = compute_quotient(mp.coloring);
    REQUIRE(r.ok());
    CHECK(*r.matrix == mp.quotient());
  }
  MultipartiteColoring mp3 = multipartite(3, GraphSpec{0, 8});
  CHECK(mp3.coloring.k == 32);
  QuotientResult r = compute_quotient(mp3.coloring);
  REQUIRE(r.ok());
  CHECK(*r.matrix == mp3.quotient());
  CHECK_THROWS_AS(multipartite(3, GraphSpec{1, 6}), UnsupportedSpec);
  CHECK_THROWS_AS(multipartite(2, GraphSpec{1, 1}), std::invalid_argument);
}

TEST_CASE("three_j yields quotient 3J") {
  for (const auto& s : {GraphSpec{0, 4}, GraphSpec{1, 2}, GraphSpec{2, 0}}) {
    Coloring c = three_j(s);
    CHECK(c.k == 4);
    QuotientResult r = compute_quotient(c);
    REQUIRE(r.ok());
    CHECK(*r.matrix == j_matrix(4, 3));
  }
  Coloring c8 = three_j(GraphSpec{0, 8});
  CHECK(c8.k == 8);
  QuotientResult r = compute_quotient(c8);
  REQUIRE(r.ok());
  CHECK(*r.matrix == j_matrix(8, 3));
  CHECK_THROWS_AS(three_j(GraphSpec{1, 1}), UnsupportedSpec);
}

TEST_CASE("three_j_minus_e yields quotient 3(J-E)") {
  for (const auto& s : {GraphSpec{0, 3}, GraphSpec{1, 1}, GraphSpec{0, 7}}) {
    Coloring c = three_j_minus_e(s);
    QuotientResult r = compute_quotient(c);
    REQUIRE(r.ok());
    CHECK(*r.matrix == j_minus_e(c.k, 3));
    CHECK(c.k == (diameter_param(s) + 1));
  }
  CHECK_THROWS_AS(three_j_minus_e(GraphSpec{0, 4}), UnsupportedSpec);
  CHECK_THROWS_AS(three_j_minus_e(GraphSpec{2, 3}), UnsupportedSpec); // m>0, k=3
}

TEST_CASE("gamma-MDS colorings") {
  struct Case {
    GraphSpec s;
    int k, gamma;
  };
  for (const auto& tc : {Case{{0, 8}, 2, 2}, Case{{1, 6}, 2, 2}, Case{{0, 12}, 2, 3},
                         Case{{2, 4}, 2, 2}, Case{{0, 4}, 2, 1}}) {
    Coloring c = gamma_mds_coloring(tc.s, tc.k);
    CHECK(c.k == (1 << tc.k) + 1);
    QuotientResult r = compute_quotient(c);
    REQUIRE(r.ok());
    CHECK(*r.matrix == gamma_mds_quotient(tc.s, tc.k, tc.gamma));
  }
  CHECK_THROWS_AS(gamma_mds_coloring(GraphSpec{0, 14}, 1), std::invalid_argument);
  CHECK_THROWS_AS(gamma_mds_coloring(GraphSpec{1, 6}, 3), UnsupportedSpec); // m>0, k=3
}

TEST_CASE("gamma-MDS syndrome form matches the materialized coloring") {
  GammaMdsSyndrome gs = gamma_mds_syndrome(2, 2);
  Coloring c = gamma_mds_coloring(GraphSpec{0, 8}, 2);
  CHECK(gs.spec == c.spec);
  for (uint64_t v = 0; v < num_vertices(c.spec); v += 13)
    REQUIRE(gs.color_of(word_of(c.spec, v)) == c.colors[v]);
}

TEST_CASE("radius-2 completely regular codes") {
  Rad2Code rc = rad2_code(GraphSpec{0, 12}, 1);
  CHECK(rc.gamma == 3);
  CHECK(rc.k == 2);
  CHECK(rc.c == 3);
  QuotientMatrix want(3);
  int n = 12;
  want.at(0, 1) = 3 * n;
  want.at(1, 0) = rc.c;
  want.at(1, 1) = 2 * n;
  want.at(1, 2) = n - rc.c;
  want.at(2, 1) = 3 * n;
  CHECK(rc.quotient == want);
  Rad2Report rep = rad2_verify(rc, 2000, 99);
  CHECK(rep.ok);
  // in_code / distance_class consistency on random-ish words.
  std::vector<int> w(12, 0);
  CHECK(rc.distance_class(w) == (rc.in_code(w) ? 0 : rc.distance_class(w)));
  CHECK_THROWS_AS(rad2_code(GraphSpec{1, 10}, 1), std::invalid_argument);
  CHECK_THROWS_AS(rad2_code(GraphSpec{0, 6}, 1), std::invalid_argument); // gamma=3, k=1
}

TEST_CASE("multifold partitions at small diameters") {
  MultifoldPartition p = multifold_partition(GraphSpec{0, 5});
  CHECK(p.alpha == 1);
  CHECK(p.codes.size() == 16);
  for (const auto& c : p.codes) REQUIRE(is_mu_fold_perfect(c, 1));

  CHECK_THROWS_AS(multifold_partition(GraphSpec{0, 2}), NotAdmissible);
  CHECK_THROWS_AS(multifold_partition(GraphSpec{0, 13}), DeskScaleExceeded);
}

TEST_CASE("recipes: parsing and evaluation") {
  RecipeResult r = eval_recipe_text("extend 1 0\n  mds 0 2\n");
  CHECK(r.coloring.spec == GraphSpec{1, 2});
  CHECK(r.quotient == plus_diag(j_minus_e(4, 2), 6));
  CHECK(r.summary.find("extend") == 0);

  // merge with re-verification
  r = eval_recipe_text("merge 1,2 3,4\n  mds 1 1\n");
  CHECK(r.coloring.k == 2);

  CHECK_THROWS_AS(eval_recipe_text("mds 0 2\nmds 0 2\n"), std::invalid_argument); // two roots
  CHECK_THROWS_AS(eval_recipe_text("   mds 0 2\n"), std::invalid_argument);       // odd indent
  CHECK_THROWS_AS(eval_recipe_text("frobnicate 1 2\n"), std::invalid_argument);   // unknown op
  CHECK_THROWS_AS(eval_recipe_text("extend 1 0\n    mds 0 2\n"), std::invalid_argument); // skip
  CHECK_THROWS_AS(eval_recipe_text("mds 0\n"), std::invalid_argument);            // arity
  CHECK_THROWS_AS(eval_recipe_text(""), std::invalid_argument);
  // comments and blank lines are fine
  CHECK_NOTHROW(eval_recipe_text("# header\n\nmds 0 2\n"));
}
