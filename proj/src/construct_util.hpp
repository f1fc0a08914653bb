// Internal helpers shared by the construction translation units.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "doob/constructions.hpp"
#include "doob/eqpart.hpp"

namespace doob::detail {

// Verifies a freshly built coloring against its declared quotient; a failure
// here means the builder itself is broken, so it surfaces as logic_error.
inline void must_verify(const Coloring& c, const QuotientMatrix& S,
                        const std::string& what) {
  QuotientResult r = verify_quotient(c, S);
  if (!r.ok())
    throw std::logic_error(what + ": built object failed verification: " +
                           r.failure->to_string());
}

// Quotient of a coloring that is required to be perfect (inputs to the
// composition operators); non-equitable input is a caller error.
inline QuotientMatrix quotient_of(const Coloring& c, const std::string& what) {
  QuotientResult r = compute_quotient(c);
  if (!r.ok())
    throw std::invalid_argument(what + ": input coloring is not perfect: " +
                                r.failure->to_string());
  return *r.matrix;
}

// S[i][j] = row[(j-i) mod k] for some row vector <=> S is circulant.
inline bool circulant_row(const QuotientMatrix& S, std::vector<int>& row) {
  row.assign(static_cast<size_t>(S.k), 0);
  for (int j = 0; j < S.k; ++j) row[static_cast<size_t>(j)] = S.at(0, j);
  for (int i = 1; i < S.k; ++i)
    for (int j = 0; j < S.k; ++j)
      if (S.at(i, j) != row[static_cast<size_t>((j - i + S.k) % S.k)]) return false;
  return true;
}

// Symbols of a Hamming-graph vertex (m = 0) as a word of Z4 values.
inline std::vector<int> word_of(const GraphSpec& s, uint64_t idx) {
  std::vector<int> w(static_cast<size_t>(s.n));
  for (int j = s.n - 1; j >= 0; --j) {
    w[static_cast<size_t>(j)] = static_cast<int>(idx & 3);
    idx >>= 2;
  }
  return w;
}

inline void require_exhaustive(const GraphSpec& s, const std::string& what) {
  if (num_vertices(s) > kExhaustiveLimit)
    throw DeskScaleExceeded(what + ": D(" + std::to_string(s.m) + "," +
                            std::to_string(s.n) +
                            ") exceeds the exhaustive range of 4^12 vertices");
}

inline std::string spec_str(const GraphSpec& s) {
  return "D(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
}

} // namespace doob::detail
