// Colorings, codes, quotient matrices, verification predicates, and the
// parameter / admissibility oracles.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doob/graph.hpp"

namespace doob {

// k x k nonnegative integer matrix; rows sum to 6m+3n when attached to a spec.
struct QuotientMatrix {
  int k = 0;
  std::vector<int> s; // row-major, k*k entries

  QuotientMatrix() = default;
  explicit QuotientMatrix(int kk) : k(kk), s(static_cast<size_t>(kk) * static_cast<size_t>(kk), 0) {}
  int& at(int i, int j) { return s[static_cast<size_t>(i) * static_cast<size_t>(k) + static_cast<size_t>(j)]; }
  int at(int i, int j) const { return s[static_cast<size_t>(i) * static_cast<size_t>(k) + static_cast<size_t>(j)]; }
  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

  std::string to_string() const;
};

QuotientMatrix j_minus_e(int k, int scale = 1);     // scale*(J-E)
QuotientMatrix j_matrix(int k, int scale);          // scale*J
QuotientMatrix scaled(const QuotientMatrix& S, int c);
QuotientMatrix plus_diag(const QuotientMatrix& S, int a); // S + a*E

// Total map from vertices to colors {1..k}, dense in canonical vertex order.
struct Coloring {
  GraphSpec spec;
  int k = 0;
  std::vector<uint8_t> colors; // values 1..k, size 4^(2m+n)

  uint8_t at(uint64_t v) const { return colors[v]; }
  bool surjective() const;
};

// Vertex subset as a bitset over canonical indices.
struct Code {
  GraphSpec spec;
  std::vector<uint64_t> bits; // ceil(N/64) words

  static Code empty(const GraphSpec& s);
  bool contains(uint64_t v) const { return (bits[v >> 6] >> (v & 63)) & 1; }
  void insert(uint64_t v) { bits[v >> 6] |= 1ull << (v & 63); }
  uint64_t size() const;
  std::vector<uint64_t> members() const;
  bool disjoint_with(const Code& other) const;
};

struct IntersectionArray {
  // [s_{0,1},...,s_{rho-1,rho}, s_{1,0},...,s_{rho,rho-1}]
  std::vector<int> values;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
  std::string to_string() const;
};

struct NotEquitable {
  uint64_t vertex = 0;               // first counterexample in canonical order
  int color = 0;                     // its color
  std::vector<int> expected_row;     // row of the candidate matrix
  std::vector<int> observed_row;     // observed per-color neighbour counts
  std::string to_string() const;
};

struct QuotientResult {
  std::optional<QuotientMatrix> matrix;
  std::optional<NotEquitable> failure;
  bool ok() const { return matrix.has_value(); }
};

// Verifies equitability over EVERY vertex (parallelized; identical result to
// sequential evaluation, first counterexample by minimum canonical index).
// Throws if the coloring exceeds the exhaustive range of 4^12 vertices.
QuotientResult compute_quotient(const Coloring& c);

// Same, but against a declared matrix (avoids the row-discovery pass).
QuotientResult verify_quotient(const Coloring& c, const QuotientMatrix& S);

struct BcResult {
  std::optional<std::pair<int, int>> bc;
  std::optional<NotEquitable> failure;
  std::string error; // e.g. wrong color count
};
BcResult is_perfect_bc(const Coloring& c);

// Minimum pairwise distance; throws on |C| < 2.
int code_distance(const Code& c);

int covering_radius(const Code& c);

struct CrcResult {
  std::optional<IntersectionArray> array;
  std::optional<QuotientMatrix> quotient; // tridiagonal distance quotient
  std::optional<NotEquitable> failure;
  bool ok() const { return array.has_value(); }
};
// Multi-source BFS distance coloring; verifies it is perfect and tridiagonal.
CrcResult completely_regular_check(const Code& c);

bool is_mu_fold_perfect(const Code& c, int mu);

struct ConditionReport {
  bool pass = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};
// Necessary conditions for a perfect (b,c)-coloring of D(m,n).
ConditionReport necessary_conditions(int b, int c, const GraphSpec& spec);

struct AdmissibilityRecord {
  bool inf_admissible = false;
  std::optional<int> best_a; // strongest guarantee among {0,1,8}
  std::vector<int> items;    // which classification items apply (1..6)
  bool admissible() const { return inf_admissible || best_a.has_value(); }
  std::string to_string() const;
};
AdmissibilityRecord admissibility(int b, int c);

struct MultifoldExistence {
  bool exists = false;
  int alpha = 0; // odd part of 6m+3n+1
  int k = 0;     // 6m+3n+1 = alpha * 2^k
  int l = 0;     // mu = alpha * l when exists
};
MultifoldExistence multifold_exists(const GraphSpec& spec, int mu);

// Recolor by a partition of {1..k} into groups; group g becomes color g+1.
Coloring merge_colors(const Coloring& c, const std::vector<std::vector<int>>& grouping);

// Extract one color class as a code.
Code color_class(const Coloring& c, int color);

// Exhaustive verification range: every-vertex checks up to 4^12 vertices.
inline constexpr uint64_t kExhaustiveLimit = 1ull << 24;

int worker_threads(); // honors EQPART_THREADS

} // namespace doob
