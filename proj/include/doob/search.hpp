// Brute-force discovery engines: exact cover with multiplicity, perfect-code
// and perfect-coloring backtracking, additive-code enumeration, and the BFS
// distance oracle. Every found object is re-verified through the eqpart
// predicates before it is returned.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "doob/eqpart.hpp"

namespace doob {

enum class SearchStatus { Found, Unsatisfiable, BudgetExhausted };

struct SearchBudget {
  uint64_t node_limit = 200'000'000;
  double time_limit_sec = 300.0;
  uint64_t seed = 1; // tie-breaking order; identical seed => identical output
};

struct ExactCoverInstance {
  uint32_t universe = 0;                  // elements 0..universe-1
  std::vector<std::vector<uint32_t>> sets; // sorted, nonempty element lists
  int mu = 1;                             // cover each element exactly mu times
};

struct ExactCoverResult {
  SearchStatus status = SearchStatus::Unsatisfiable;
  std::vector<uint32_t> selected; // indices into inst.sets, sorted
};

ExactCoverResult exact_cover(const ExactCoverInstance& inst,
                             const SearchBudget& budget = {});

struct CodeSearchResult {
  SearchStatus status = SearchStatus::Unsatisfiable;
  std::optional<Code> code;
};

// mu-fold 1-perfect code via exact cover over radius-1 balls. An arithmetic
// rejection (N*mu not divisible by the ball size) precedes any search and is
// exact because all balls have equal size.
CodeSearchResult find_perfect_code(const GraphSpec& spec, int mu,
                                   const SearchBudget& budget = {});

struct AdditiveCodeResult {
  bool found = false;       // additive structure found
  std::optional<Code> code; // kernel code (or plain search fallback)
  std::vector<Code> cosets; // 16 pairwise disjoint 1-perfect codes, [0]=code
};

// For diameter-5 specs (2m+n = 5): enumerates group homomorphisms from the
// vertex group (Z4^2 per Shrikhande coordinate; Z4 or Z2^2 per K4 coordinate)
// onto an abelian group of order 16 whose restriction to the unit ball
// difference set is bijective. The kernel is a 1-perfect code and the 16
// preimages partition the vertex set into disjoint 1-perfect codes. Falls
// back to plain find_perfect_code (without the partition) if no homomorphism
// works.
AdditiveCodeResult find_additive_perfect_code(const GraphSpec& spec);

struct ColoringConstraints {
  // Pre-assigned colors (vertex, color in 1..k).
  std::vector<std::pair<uint64_t, uint8_t>> fixed;
  // Optional per-vertex color filter; empty = allow all.
  std::function<bool(uint64_t, int)> allow;
};

struct ColoringSearchResult {
  SearchStatus status = SearchStatus::Unsatisfiable;
  std::optional<Coloring> coloring;
};

// Backtracking over vertices in BFS order from 0 with per-vertex row
// bookkeeping against S. Vertex 0 is forced to color 1 unless a constraint
// fixes it. Output re-verified by verify_quotient before returning.
ColoringSearchResult find_perfect_coloring(const GraphSpec& spec,
                                           const QuotientMatrix& S,
                                           const ColoringConstraints& cons = {},
                                           const SearchBudget& budget = {});

// True BFS distance; independent of the coordinate-wise formula. Only for
// graphs with at most 4^6 vertices.
int bfs_distance(const GraphSpec& spec, uint64_t u, uint64_t v);

} // namespace doob
