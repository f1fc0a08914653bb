// Doob graphs D(m,n) and quaternary Hamming graphs H(n,4) = D(0,n):
// canonical vertex indexing, adjacency, distance, spectra.
//
// Vertices are elements of (Z4^2)^m x Z4^n. The canonical integer index
// places the Shrikhande coordinates in the most significant digits
// (base 16, digit 4a+b) followed by the K4 coordinates (base 4):
//   index(x) = sum_i (4a_i+b_i) 16^(m-i) 4^n + sum_j x'_j 4^(n-j).
// This ordering is part of the file formats and is fixed.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace doob {

// Thrown when an operation would require materializing or scanning more
// vertices than its stated exhaustive range.
struct DeskScaleExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSpec {
  int m = 0; // Shrikhande coordinates
  int n = 0; // K4 coordinates

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct Vertex {
  std::vector<std::array<int, 2>> shr; // m pairs (a,b), a,b in Z4
  std::vector<int> k4;                 // n values in Z4

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

namespace shrik {
// Connecting set of the Shrikhande graph as packed Z4^2 digits 4a+b.
inline constexpr std::array<int, 6> kConnecting = {
    0x1, 0x3, 0x4, 0xC, 0x5, 0xF}; // 01, 03, 10, 30, 11, 33

inline constexpr int pack(int a, int b) { return ((a & 3) << 2) | (b & 3); }

// Component-wise Z4^2 addition on packed digits.
inline constexpr int add(int d, int e) {
  return ((((d >> 2) + (e >> 2)) & 3) << 2) | (((d & 3) + (e & 3)) & 3);
}
inline constexpr int neg(int d) {
  return (((4 - (d >> 2)) & 3) << 2) | ((4 - (d & 3)) & 3);
}
inline constexpr int sub(int d, int e) { return add(d, neg(e)); }

struct Tables {
  // dist[d] = Shrikhande distance between u and u+d (vertex-transitive).
  std::array<int, 16> dist{};
  // nbr[d][t] = d + kConnecting[t]
  std::array<std::array<int, 6>, 16> nbr{};
  constexpr Tables() {
    for (int d = 0; d < 16; ++d) {
      bool adj = false;
      for (int s : kConnecting)
        if (d == s) adj = true;
      dist[static_cast<size_t>(d)] = (d == 0) ? 0 : (adj ? 1 : 2);
      for (int t = 0; t < 6; ++t)
        nbr[static_cast<size_t>(d)][static_cast<size_t>(t)] = add(d, kConnecting[t]);
    }
  }
};
inline constexpr Tables kTables{};
} // namespace shrik

inline void validate(const GraphSpec& s) {
  if (s.m < 0 || s.n < 0 || s.m + s.n < 1)
    throw std::invalid_argument("graph spec requires m,n >= 0 and m+n >= 1");
  if (2 * s.m + s.n > 31)
    throw std::invalid_argument("graph spec too large for 64-bit indexing");
}

inline int diameter_param(const GraphSpec& s) { return 2 * s.m + s.n; }
inline int degree(const GraphSpec& s) { return 6 * s.m + 3 * s.n; }
inline uint64_t num_vertices(const GraphSpec& s) {
  return 1ull << (2 * (2 * s.m + s.n));
}

// Bit shift of coordinate digits inside the canonical index.
// Shrikhande coordinate i (0-based) occupies bits [shr_shift(i), +4),
// K4 coordinate j occupies bits [k4_shift(j), +2).
inline int k4_shift(const GraphSpec& s, int j) { return 2 * (s.n - 1 - j); }
inline int shr_shift(const GraphSpec& s, int i) {
  return 4 * (s.m - 1 - i) + 2 * s.n;
}

inline uint64_t index_of(const GraphSpec& s, const Vertex& v) {
  if (static_cast<int>(v.shr.size()) != s.m || static_cast<int>(v.k4.size()) != s.n)
    throw std::invalid_argument("vertex shape does not match spec");
  uint64_t idx = 0;
  for (const auto& p : v.shr) {
    if (p[0] < 0 || p[0] > 3 || p[1] < 0 || p[1] > 3)
      throw std::out_of_range("Shrikhande coordinate out of Z4");
    idx = (idx << 4) | static_cast<uint64_t>(shrik::pack(p[0], p[1]));
  }
  for (int x : v.k4) {
    if (x < 0 || x > 3) throw std::out_of_range("K4 coordinate out of Z4");
    idx = (idx << 2) | static_cast<uint64_t>(x);
  }
  return idx;
}

inline Vertex vertex_at(const GraphSpec& s, uint64_t idx) {
  if (idx >= num_vertices(s)) throw std::out_of_range("vertex index out of range");
  Vertex v;
  v.shr.resize(static_cast<size_t>(s.m));
  v.k4.resize(static_cast<size_t>(s.n));
  for (int j = s.n - 1; j >= 0; --j) {
    v.k4[static_cast<size_t>(j)] = static_cast<int>(idx & 3);
    idx >>= 2;
  }
  for (int i = s.m - 1; i >= 0; --i) {
    int d = static_cast<int>(idx & 15);
    v.shr[static_cast<size_t>(i)] = {d >> 2, d & 3};
    idx >>= 4;
  }
  return v;
}

// Visit the 6m+3n neighbour indices of vertex idx.
template <typename F>
inline void for_each_neighbor(const GraphSpec& s, uint64_t idx, F&& f) {
  for (int i = 0; i < s.m; ++i) {
    int sh = shr_shift(s, i);
    uint64_t d = (idx >> sh) & 15;
    uint64_t base = idx & ~(15ull << sh);
    for (int t = 0; t < 6; ++t)
      f(base | (static_cast<uint64_t>(shrik::kTables.nbr[d][static_cast<size_t>(t)]) << sh));
  }
  for (int j = 0; j < s.n; ++j) {
    int sh = k4_shift(s, j);
    uint64_t d = (idx >> sh) & 3;
    uint64_t base = idx & ~(3ull << sh);
    for (uint64_t w = 0; w < 4; ++w)
      if (w != d) f(base | (w << sh));
  }
}

inline std::vector<uint64_t> neighbors(const GraphSpec& s, uint64_t idx) {
  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(degree(s)));
  for_each_neighbor(s, idx, [&](uint64_t u) { out.push_back(u); });
  return out;
}
inline std::vector<Vertex> neighbors(const GraphSpec& s, const Vertex& v) {
  std::vector<Vertex> out;
  for (uint64_t u : neighbors(s, index_of(s, v))) out.push_back(vertex_at(s, u));
  return out;
}

// Coordinate-wise distance: Shrikhande table per Z4^2 coordinate plus the
// inequality indicator per K4 coordinate. Equals BFS distance (the BFS
// oracle lives in the search module and is exercised by the tests).
inline int distance(const GraphSpec& s, uint64_t u, uint64_t v) {
  int d = 0;
  uint64_t x = u ^ 0, y = v; // keep explicit
  for (int j = 0; j < s.n; ++j) {
    if (((x ^ y) & 3) != 0) ++d;
    x >>= 2;
    y >>= 2;
  }
  for (int i = 0; i < s.m; ++i) {
    d += shrik::kTables.dist[static_cast<size_t>(shrik::sub(static_cast<int>(x & 15), static_cast<int>(y & 15)))];
    x >>= 4;
    y >>= 4;
  }
  return d;
}
inline int distance(const GraphSpec& s, const Vertex& u, const Vertex& v) {
  return distance(s, index_of(s, u), index_of(s, v));
}

// Eigenvalues 6m+3n-4i, i = 0..2m+n, descending.
inline std::vector<int> eigenvalues(const GraphSpec& s) {
  std::vector<int> ev;
  for (int i = 0; i <= diameter_param(s); ++i) ev.push_back(degree(s) - 4 * i);
  return ev;
}

// Multiplicity of eigenvalue 6m+3n-4i, the same as in H(2m+n,4):
// binom(2m+n, i) * 3^i.
inline uint64_t eigenvalue_multiplicity(const GraphSpec& s, int i) {
  int N = diameter_param(s);
  uint64_t b = 1;
  for (int t = 1; t <= i; ++t) b = b * static_cast<uint64_t>(N - t + 1) / static_cast<uint64_t>(t);
  uint64_t p = 1;
  for (int t = 0; t < i; ++t) p *= 3;
  return b * p;
}

// Radius-1 ball around x as sorted indices ({x} plus its neighbours).
std::vector<uint64_t> ball(const GraphSpec& s, uint64_t x);

// Group translation of vertices: component-wise Z4 addition on K4
// coordinates and Z4^2 addition on Shrikhande coordinates.
inline uint64_t translate(const GraphSpec& s, uint64_t u, uint64_t t) {
  uint64_t r = 0;
  for (int j = s.n - 1; j >= 0; --j) {
    int sh = k4_shift(s, j);
    uint64_t v = (((u >> sh) & 3) + ((t >> sh) & 3)) & 3;
    r |= v << sh;
  }
  for (int i = s.m - 1; i >= 0; --i) {
    int sh = shr_shift(s, i);
    uint64_t v = static_cast<uint64_t>(
        shrik::add(static_cast<int>((u >> sh) & 15), static_cast<int>((t >> sh) & 15)));
    r |= v << sh;
  }
  return r;
}
inline uint64_t negate(const GraphSpec& s, uint64_t u) {
  uint64_t r = 0;
  for (int j = 0; j < s.n; ++j) {
    int sh = k4_shift(s, j);
    r |= (((4 - ((u >> sh) & 3)) & 3) << sh);
  }
  for (int i = 0; i < s.m; ++i) {
    int sh = shr_shift(s, i);
    r |= static_cast<uint64_t>(shrik::neg(static_cast<int>((u >> sh) & 15))) << sh;
  }
  return r;
}

} // namespace doob
