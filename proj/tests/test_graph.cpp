#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "doob/graph.hpp"
#include "doob/search.hpp"

using namespace doob;

namespace {

const std::vector<GraphSpec> kSmallSpecs = {
    {1, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}, {0, 4}};

} // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(GraphSpec{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(GraphSpec{-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate(GraphSpec{16, 0}), std::invalid_argument); // 2m+n = 32
  CHECK_NOTHROW(validate(GraphSpec{15, 1}));                          // 2m+n = 31
}

TEST_CASE("vertex count and degree") {
  CHECK(num_vertices(GraphSpec{1, 0}) == 16);
  CHECK(num_vertices(GraphSpec{0, 2}) == 16);
  CHECK(num_vertices(GraphSpec{2, 1}) == 1024);
  CHECK(degree(GraphSpec{2, 1}) == 15);
  CHECK(diameter_param(GraphSpec{2, 1}) == 5);
  for (const auto& s : kSmallSpecs) {
    size_t deg = static_cast<size_t>(degree(s));
    for (uint64_t v = 0; v < num_vertices(s); ++v)
      REQUIRE(neighbors(s, v).size() == deg);
  }
}

TEST_CASE("index / vertex round trip") {
  for (const auto& s : kSmallSpecs) {
    for (uint64_t v = 0; v < num_vertices(s); ++v)
      REQUIRE(index_of(s, vertex_at(s, v)) == v);
  }
  // Canonical digit order: Shrikhande most significant.
  GraphSpec s{1, 1};
  Vertex v;
  v.shr = {{2, 3}};
  v.k4 = {1};
  CHECK(index_of(s, v) == ((4 * 2 + 3) << 2 | 1));
}

TEST_CASE("adjacency is symmetric, irreflexive, distance-1") {
  for (const auto& s : kSmallSpecs) {
    for (uint64_t v = 0; v < num_vertices(s); ++v) {
      for (uint64_t u : neighbors(s, v)) {
        REQUIRE(u != v);
        REQUIRE(distance(s, u, v) == 1);
        auto back = neighbors(s, u);
        REQUIRE(std::count(back.begin(), back.end(), v) == 1);
      }
    }
  }
}

TEST_CASE("Shrikhande factor is SRG(16,6,2,2)") {
  GraphSpec s{1, 0};
  for (uint64_t v = 0; v < 16; ++v) {
    auto nv = neighbors(s, v);
    std::set<uint64_t> sv(nv.begin(), nv.end());
    for (uint64_t u = 0; u < 16; ++u) {
      if (u == v) continue;
      auto nu = neighbors(s, u);
      int common = 0;
      for (uint64_t w : nu) common += sv.count(w);
      REQUIRE(common == 2); // lambda = mu = 2
    }
  }
}

TEST_CASE("coordinate distance equals BFS distance") {
  for (const auto& s : kSmallSpecs) {
    uint64_t N = num_vertices(s);
    std::mt19937_64 rng(7);
    int pairs = (N <= 64) ? -1 : 500;
    if (pairs < 0) {
      for (uint64_t u = 0; u < N; ++u)
        for (uint64_t v = 0; v < N; ++v)
          REQUIRE(distance(s, u, v) == bfs_distance(s, u, v));
    } else {
      for (int t = 0; t < pairs; ++t) {
        uint64_t u = rng() % N, v = rng() % N;
        REQUIRE(distance(s, u, v) == bfs_distance(s, u, v));
      }
    }
  }
}

TEST_CASE("diameter 2m+n is attained") {
  for (const auto& s : kSmallSpecs) {
    int maxd = 0;
    for (uint64_t v = 0; v < num_vertices(s); ++v)
      maxd = std::max(maxd, distance(s, uint64_t{0}, v));
    CHECK(maxd == diameter_param(s));
  }
}

TEST_CASE("balls") {
  for (const auto& s : kSmallSpecs) {
    auto b = ball(s, 3 % num_vertices(s));
    CHECK(b.size() == static_cast<size_t>(degree(s)) + 1);
    CHECK(std::is_sorted(b.begin(), b.end()));
    for (uint64_t u : b) CHECK(distance(s, u, 3 % num_vertices(s)) <= 1);
  }
}

TEST_CASE("translations are automorphisms, negation inverts") {
  std::mt19937_64 rng(11);
  for (const auto& s : kSmallSpecs) {
    uint64_t N = num_vertices(s);
    for (int t = 0; t < 50; ++t) {
      uint64_t u = rng() % N, v = rng() % N, w = rng() % N;
      REQUIRE(distance(s, u, v) ==
              distance(s, translate(s, u, w), translate(s, v, w)));
      REQUIRE(translate(s, translate(s, u, w), negate(s, w)) == u);
    }
    REQUIRE(negate(s, uint64_t{0}) == 0);
  }
}

TEST_CASE("eigenvalue multiplicities sum to the vertex count") {
  for (const auto& s : {GraphSpec{1, 0}, GraphSpec{2, 1}, GraphSpec{3, 2},
                        GraphSpec{0, 10}}) {
    uint64_t total = 0;
    for (int i = 0; i <= diameter_param(s); ++i)
      total += eigenvalue_multiplicity(s, i);
    CHECK(total == num_vertices(s));
  }
}

TEST_CASE("numeric spectrum of small graphs matches the formula") {
  for (const auto& s : {GraphSpec{1, 0}, GraphSpec{0, 2}}) {
    int N = static_cast<int>(num_vertices(s));
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    for (int v = 0; v < N; ++v)
      for (uint64_t u : neighbors(s, static_cast<uint64_t>(v))) A(v, static_cast<int>(u)) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + N);
    std::vector<double> want;
    for (int i = 0; i <= diameter_param(s); ++i)
      want.insert(want.end(), eigenvalue_multiplicity(s, i),
                  static_cast<double>(degree(s) - 4 * i));
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i)
      REQUIRE(std::abs(got[i] - want[i]) < 1e-9);
  }
}

TEST_CASE("D(m,n) and H(2m+n,4) share spectra but differ as graphs") {
  // Same eigenvalues/multiplicities...
  CHECK(eigenvalues(GraphSpec{1, 0}) == eigenvalues(GraphSpec{0, 2}));
  CHECK(eigenvalue_multiplicity(GraphSpec{1, 0}, 1) ==
        eigenvalue_multiplicity(GraphSpec{0, 2}, 1));
  // ...but the Shrikhande factor has triangles through non-parallel edges
  // giving a different local structure than H(2,4): count triangles at 0.
  auto triangles = [](const GraphSpec& s) {
    auto nb = neighbors(s, uint64_t{0});
    int t = 0;
    for (uint64_t a : nb)
      for (uint64_t b : nb)
        if (a < b && distance(s, a, b) == 1) ++t;
    return t;
  };
  CHECK(triangles(GraphSpec{1, 0}) == 6);
  CHECK(triangles(GraphSpec{0, 2}) == 6); // K4 factors: 2 coords * C(3,2)
  // The graphs still differ: Shrikhande has no K4 through an edge.
  GraphSpec shr{1, 0}, h2{0, 2};
  auto has_k4 = [&](const GraphSpec& s) {
    auto nb = neighbors(s, uint64_t{0});
    for (uint64_t a : nb)
      for (uint64_t b : nb)
        for (uint64_t c : nb)
          if (a < b && b < c && distance(s, a, b) == 1 && distance(s, a, c) == 1 &&
              distance(s, b, c) == 1)
            return true;
    return false;
  };
  CHECK(!has_k4(shr));
  CHECK(has_k4(h2));
}
