#include "doob/search.hpp"

#include "doob/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace doob {

namespace {

struct Budgeter {
  uint64_t node_limit;
  std::chrono::steady_clock::time_point deadline;
  uint64_t nodes = 0;
  bool exhausted = false;

  explicit Budgeter(const SearchBudget& b)
      : node_limit(b.node_limit),
        deadline(std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(b.time_limit_sec))) {}

  // Returns false once the budget is spent.
  bool tick() {
    if (exhausted) return false;
    ++nodes;
    if (nodes > node_limit ||
        ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline))
      exhausted = true;
    return !exhausted;
  }
};

// Deterministic branch order: position of each set index in a seeded shuffle.
std::vector<uint32_t> seeded_ranks(size_t count, uint64_t seed) {
  std::vector<uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0u);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<uint32_t> rank(count);
  for (uint32_t i = 0; i < count; ++i) rank[perm[i]] = i;
  return rank;
}

} // namespace

ExactCoverResult exact_cover(const ExactCoverInstance& inst,
                             const SearchBudget& budget) {
  if (inst.mu < 1) throw std::invalid_argument("exact_cover: mu must be >= 1");
  for (const auto& s : inst.sets) {
    if (s.empty()) throw std::invalid_argument("exact_cover: empty subset");
    for (uint32_t e : s)
      if (e >= inst.universe)
        throw std::invalid_argument("exact_cover: element out of universe");
  }

  ExactCoverResult res;
  if (inst.universe == 0) {
    res.status = SearchStatus::Found;
    return res;
  }
  if (inst.sets.empty()) {
    res.status = SearchStatus::Unsatisfiable;
    return res;
  }

  // Equal-sized subsets: divisibility of universe*mu by the set size is
  // necessary, so reject without searching.
  {
    size_t z = inst.sets[0].size();
    bool equal = std::all_of(inst.sets.begin(), inst.sets.end(),
                             [&](const auto& s) { return s.size() == z; });
    if (equal && (static_cast<uint64_t>(inst.universe) * static_cast<uint64_t>(inst.mu)) % z != 0) {
      res.status = SearchStatus::Unsatisfiable;
      return res;
    }
  }

  std::vector<std::vector<uint32_t>> occ(inst.universe);
  for (uint32_t s = 0; s < inst.sets.size(); ++s)
    for (uint32_t e : inst.sets[s]) occ[e].push_back(s);

  std::vector<uint32_t> rank = seeded_ranks(inst.sets.size(), budget.seed);
  for (auto& lst : occ)
    std::sort(lst.begin(), lst.end(),
              [&](uint32_t a, uint32_t b) { return rank[a] < rank[b]; });

  // Incremental state: rem[e] = coverage still needed; used[s] = set already
  // chosen; blocked[s] = #elements of s with rem == 0; cand[e] = #sets
  // containing e that are still selectable (unused and unblocked).
  std::vector<int> rem(inst.universe, inst.mu);
  std::vector<char> used(inst.sets.size(), 0);
  std::vector<int> blocked(inst.sets.size(), 0);
  std::vector<int> cand(inst.universe, 0);
  for (uint32_t e = 0; e < inst.universe; ++e)
    cand[e] = static_cast<int>(occ[e].size());
  std::vector<uint32_t> chosen;
  Budgeter bud(budget);

  auto selectable = [&](uint32_t s) { return !used[s] && blocked[s] == 0; };
  auto select = [&](uint32_t s) {
    used[s] = 1;
    for (uint32_t e : inst.sets[s]) --cand[e]; // s was selectable
    for (uint32_t e : inst.sets[s]) {
      if (--rem[e] == 0)
        for (uint32_t s2 : occ[e])
          if (++blocked[s2] == 1 && !used[s2])
            for (uint32_t e2 : inst.sets[s2]) --cand[e2];
    }
    chosen.push_back(s);
  };
  auto unselect = [&](uint32_t s) {
    chosen.pop_back();
    for (uint32_t e : inst.sets[s]) {
      if (rem[e]++ == 0)
        for (uint32_t s2 : occ[e])
          if (blocked[s2]-- == 1 && !used[s2])
            for (uint32_t e2 : inst.sets[s2]) ++cand[e2];
    }
    for (uint32_t e : inst.sets[s]) ++cand[e];
    used[s] = 0;
  };

  // Branch on the element with the fewest selectable sets remaining (ties:
  // minimum index) and pick the sets completing its coverage as an increasing
  // combination of its occurrence list — no permutation duplicates.
  std::function<bool()> solve = [&]() -> bool {
    uint32_t best = inst.universe;
    for (uint32_t e = 0; e < inst.universe; ++e)
      if (rem[e] > 0 && (best == inst.universe || cand[e] < cand[best])) best = e;
    if (best == inst.universe) return true; // everything covered
    if (cand[best] < rem[best]) return false;

    std::vector<uint32_t> live; // snapshot, already in seeded rank order
    live.reserve(static_cast<size_t>(cand[best]));
    for (uint32_t s : occ[best])
      if (selectable(s)) live.push_back(s);
    int need = rem[best];
    std::function<bool(size_t, int)> comb = [&](size_t from, int left) -> bool {
      if (left == 0) return solve();
      for (size_t i = from; i + static_cast<size_t>(left) <= live.size(); ++i) {
        uint32_t s = live[i];
        if (!selectable(s)) continue; // may have died during this combination
        if (!bud.tick()) return false;
        select(s);
        if (comb(i + 1, left - 1)) return true;
        unselect(s);
        if (bud.exhausted) return false;
      }
      return false;
    };
    return comb(0, need);
  };

  bool ok = solve();
  if (bud.exhausted) {
    res.status = SearchStatus::BudgetExhausted;
    return res;
  }
  if (!ok) {
    res.status = SearchStatus::Unsatisfiable;
    return res;
  }

  // Re-check the cover before handing it out.
  std::vector<int> cover(inst.universe, 0);
  for (uint32_t s : chosen)
    for (uint32_t e : inst.sets[s]) ++cover[e];
  for (uint32_t e = 0; e < inst.universe; ++e)
    if (cover[e] != inst.mu)
      throw std::logic_error("exact_cover: produced selection fails re-check");

  std::sort(chosen.begin(), chosen.end());
  res.selected = std::move(chosen);
  res.status = SearchStatus::Found;
  return res;
}

CodeSearchResult find_perfect_code(const GraphSpec& spec, int mu,
                                   const SearchBudget& budget) {
  validate(spec);
  if (mu < 1) throw std::invalid_argument("find_perfect_code: mu must be >= 1");
  uint64_t N = num_vertices(spec);
  uint64_t ballsize = static_cast<uint64_t>(degree(spec)) + 1;

  CodeSearchResult res;
  if ((N * static_cast<uint64_t>(mu)) % ballsize != 0) {
    res.status = SearchStatus::Unsatisfiable; // sphere-packing arithmetic
    return res;
  }
  if (N > (1ull << 20))
    throw DeskScaleExceeded("find_perfect_code: graph too large for exact cover");

  ExactCoverInstance inst;
  inst.universe = static_cast<uint32_t>(N);
  inst.mu = mu;
  inst.sets.reserve(N);
  for (uint64_t x = 0; x < N; ++x) {
    std::vector<uint32_t> b;
    for (uint64_t v : ball(spec, x)) b.push_back(static_cast<uint32_t>(v));
    inst.sets.push_back(std::move(b));
  }

  ExactCoverResult cover = exact_cover(inst, budget);
  res.status = cover.status;
  if (cover.status != SearchStatus::Found) return res;

  Code c = Code::empty(spec);
  for (uint32_t s : cover.selected) c.insert(s); // set index = ball center
  if (!is_mu_fold_perfect(c, mu))
    throw std::logic_error("find_perfect_code: solver output fails verification");
  res.code = std::move(c);
  return res;
}

AdditiveCodeResult find_additive_perfect_code(const GraphSpec& spec) {
  validate(spec);
  if (diameter_param(spec) != 5)
    throw std::invalid_argument("find_additive_perfect_code: needs 2m+n = 5");
  const uint64_t N = num_vertices(spec); // 1024

  AdditiveCodeResult out;
  if (spec.m == 0) {
    // The Hamming code is additive under bitwise XOR; take its syndrome cosets.
    CodePartition p = perfect_code_partition(spec);
    out.found = true;
    out.code = p.codes[0];
    out.cosets = std::move(p.codes);
    return out;
  }

  // Each Shrikhande coordinate contributes two Z4 slots (translations of the
  // Shrikhande graph form Z4^2, and only that group preserves its connecting
  // set). A K4 coordinate is symbol-transitive under every symbol group, so
  // it contributes either one Z4 slot or two Z2 slots (XOR on the symbol
  // bits); both choices keep the graph a Cayley graph. A code is additive
  // when some homomorphism from the resulting mixed group onto an abelian
  // group of order 16 (Z4^2, Z4 x Z2^2, or Z2^4) is bijective on the closed
  // unit ball; its 16 syndrome preimages then partition V into 1-perfect
  // codes.
  struct Slot {
    int shift;
    int mask; // 3 or 1
    int mod;  // 4 or 2
  };
  const uint64_t kEnumCap = uint64_t{1} << 27;
  const std::vector<std::vector<int>> shapes = {{4, 4}, {4, 2, 2}, {2, 2, 2, 2}};

  for (int combo = 0; combo < (1 << spec.n); ++combo) {
    std::vector<Slot> slots;
    for (int i = 0; i < spec.m; ++i) {
      int sh = shr_shift(spec, i);
      slots.push_back({sh + 2, 3, 4});
      slots.push_back({sh, 3, 4});
    }
    for (int j = 0; j < spec.n; ++j) {
      int sh = k4_shift(spec, j);
      if (combo & (1 << j)) {
        slots.push_back({sh + 1, 1, 2});
        slots.push_back({sh, 1, 2});
      } else {
        slots.push_back({sh, 3, 4});
      }
    }
    const size_t T = slots.size();
    auto slots_of = [&](uint64_t x) {
      std::vector<int> d(T);
      for (size_t t = 0; t < T; ++t)
        d[t] = static_cast<int>((x >> slots[t].shift) & static_cast<uint64_t>(slots[t].mask));
      return d;
    };

    // Sparse slot vectors of the 15 neighbour deltas.
    std::vector<std::vector<std::pair<int, int>>> deltas; // (slot, digit)
    for (uint64_t u : neighbors(spec, uint64_t{0})) {
      auto d = slots_of(u);
      std::vector<std::pair<int, int>> sp;
      for (size_t t = 0; t < T; ++t)
        if (d[t] != 0) sp.emplace_back(static_cast<int>(t), d[t]);
      deltas.push_back(std::move(sp));
    }

    for (const std::vector<int>& mods : shapes) {
      const size_t R = mods.size();
      // Hom(Z_a, Z_b) is cyclic of order gcd(a,b); index h acts as
      // multiplication by h*b/gcd(a,b) mod b.
      std::vector<std::vector<int>> homs(R, std::vector<int>(T));  // gcd sizes
      std::vector<std::vector<int>> step(R, std::vector<int>(T));  // b/gcd
      uint64_t total = 1;
      for (size_t r = 0; r < R; ++r)
        for (size_t t = 0; t < T; ++t) {
          int g = std::gcd(slots[t].mod, mods[r]);
          homs[r][t] = g;
          step[r][t] = mods[r] / g;
          total *= static_cast<uint64_t>(g);
        }
      if (total > kEnumCap) continue;

      std::vector<std::vector<int>> rows(R, std::vector<int>(T)); // effective multipliers mod mods[r]
      for (uint64_t M = 0; M < total; ++M) {
        uint64_t rem = M;
        for (size_t r = 0; r < R; ++r)
          for (size_t t = 0; t < T; ++t) {
            rows[r][t] = static_cast<int>(rem % static_cast<uint64_t>(homs[r][t])) * step[r][t];
            rem /= static_cast<uint64_t>(homs[r][t]);
          }
        unsigned seen = 1; // image of 0
        bool ok = true;
        for (const auto& sp : deltas) {
          int s = 0;
          for (size_t r = 0; r < R; ++r) {
            int v = 0;
            for (auto [t, d] : sp) v += d * rows[r][t];
            s = s * mods[r] + v % mods[r];
          }
          unsigned bit = 1u << s;
          if (seen & bit) {
            ok = false;
            break;
          }
          seen |= bit;
        }
        if (!ok) continue;

        // Bijective on the ball: the 16 syndrome preimages are 1-perfect codes.
        std::vector<Code> cosets(16, Code::empty(spec));
        for (uint64_t x = 0; x < N; ++x) {
          auto d = slots_of(x);
          int s = 0;
          for (size_t r = 0; r < R; ++r) {
            int v = 0;
            for (size_t t = 0; t < T; ++t) v += d[t] * rows[r][t];
            s = s * mods[r] + v % mods[r];
          }
          cosets[static_cast<size_t>(s)].insert(x);
        }
        for (const auto& c : cosets)
          if (!is_mu_fold_perfect(c, 1))
            throw std::logic_error("additive code search: coset fails verification");
        out.found = true;
        out.code = cosets[0];
        out.cosets = std::move(cosets);
        return out;
      }
    }
  }

  // No additive structure found: fall back to a plain search without the
  // partition guarantee.
  CodeSearchResult fb = find_perfect_code(spec, 1);
  if (fb.status == SearchStatus::Found) out.code = std::move(fb.code);
  return out;
}

namespace {

// Target class sizes implied by S (n_i S_ij = n_j S_ji), when the support
// graph of S is connected; empty vector when undetermined or impossible.
std::vector<uint64_t> class_sizes(const QuotientMatrix& S, uint64_t N) {
  int k = S.k;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((S.at(i, j) == 0) != (S.at(j, i) == 0)) return {}; // impossible
  std::vector<long long> num(static_cast<size_t>(k), 0), den(static_cast<size_t>(k), 1);
  std::vector<int> state(static_cast<size_t>(k), 0);
  num[0] = 1;
  state[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < k; ++j) {
      if (j == i || S.at(i, j) == 0 || state[static_cast<size_t>(j)]) continue;
      // n_j = n_i * S_ij / S_ji
      long long n = num[static_cast<size_t>(i)] * S.at(i, j);
      long long d = den[static_cast<size_t>(i)] * S.at(j, i);
      long long g = std::gcd(n, d);
      num[static_cast<size_t>(j)] = n / g;
      den[static_cast<size_t>(j)] = d / g;
      state[static_cast<size_t>(j)] = 1;
      q.push(j);
    }
  }
  for (int i = 0; i < k; ++i)
    if (!state[static_cast<size_t>(i)]) return {}; // disconnected: undetermined
  long long L = 1;
  for (int i = 0; i < k; ++i) L = std::lcm(L, den[static_cast<size_t>(i)]);
  long long total = 0;
  for (int i = 0; i < k; ++i) total += num[static_cast<size_t>(i)] * (L / den[static_cast<size_t>(i)]);
  if (total == 0 || N % static_cast<uint64_t>(total) != 0) return {0}; // sentinel: sizes non-integral
  uint64_t unit = N / static_cast<uint64_t>(total);
  std::vector<uint64_t> sz(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    sz[static_cast<size_t>(i)] = static_cast<uint64_t>(num[static_cast<size_t>(i)] * (L / den[static_cast<size_t>(i)])) * unit;
  return sz;
}

} // namespace

ColoringSearchResult find_perfect_coloring(const GraphSpec& spec,
                                           const QuotientMatrix& S,
                                           const ColoringConstraints& cons,
                                           const SearchBudget& budget) {
  validate(spec);
  const int k = S.k;
  if (k < 1) throw std::invalid_argument("find_perfect_coloring: empty matrix");
  for (int i = 0; i < k; ++i) {
    int sum = 0;
    for (int j = 0; j < k; ++j) {
      if (S.at(i, j) < 0) throw std::invalid_argument("negative quotient entry");
      sum += S.at(i, j);
    }
    if (sum != degree(spec))
      throw std::invalid_argument("find_perfect_coloring: row sums must equal 6m+3n");
  }
  const uint64_t N = num_vertices(spec);
  if (N > (1ull << 16))
    throw DeskScaleExceeded("find_perfect_coloring: graph too large for search");

  ColoringSearchResult res;

  std::vector<uint64_t> targets = class_sizes(S, N);
  if (targets.size() == 1 && targets[0] == 0) {
    res.status = SearchStatus::Unsatisfiable; // class sizes not integral
    return res;
  }
  const bool have_targets = static_cast<int>(targets.size()) == k;

  const int deg = degree(spec);
  std::vector<uint32_t> adj(N * static_cast<uint64_t>(deg));
  for (uint64_t v = 0; v < N; ++v) {
    size_t t = static_cast<size_t>(v) * static_cast<size_t>(deg);
    for_each_neighbor(spec, v, [&](uint64_t u) { adj[t++] = static_cast<uint32_t>(u); });
  }

  // BFS assignment order keeps every new vertex adjacent to colored ones.
  std::vector<uint32_t> order;
  order.reserve(N);
  {
    std::vector<char> vis(N, 0);
    for (uint64_t root = 0; root < N; ++root) {
      if (vis[root]) continue;
      std::queue<uint32_t> q;
      q.push(static_cast<uint32_t>(root));
      vis[root] = 1;
      while (!q.empty()) {
        uint32_t v = q.front();
        q.pop();
        order.push_back(v);
        size_t t = static_cast<size_t>(v) * static_cast<size_t>(deg);
        for (int e = 0; e < deg; ++e) {
          uint32_t u = adj[t + static_cast<size_t>(e)];
          if (!vis[u]) {
            vis[u] = 1;
            q.push(u);
          }
        }
      }
    }
  }

  std::vector<uint8_t> fixed(N, 0);
  for (auto [v, c] : cons.fixed) {
    if (v >= N || c < 1 || c > k)
      throw std::invalid_argument("find_perfect_coloring: bad fixed assignment");
    if (fixed[v] != 0 && fixed[v] != c) {
      res.status = SearchStatus::Unsatisfiable;
      return res;
    }
    fixed[v] = c;
  }

  // Seeded color branch order (colors are interchangeable up to renaming only
  // when S is symmetric under it, so this is purely a tie-break).
  std::vector<int> corder(static_cast<size_t>(k));
  std::iota(corder.begin(), corder.end(), 1);
  {
    std::mt19937_64 rng(budget.seed);
    std::shuffle(corder.begin(), corder.end(), rng);
  }

  std::vector<uint8_t> col(N, 0);
  std::vector<std::vector<int>> cnt(N, std::vector<int>(static_cast<size_t>(k), 0));
  std::vector<int> unc(N, deg);
  std::vector<uint64_t> used(static_cast<size_t>(k), 0);
  Budgeter bud(budget);

  std::function<bool(size_t)> go = [&](size_t idx) -> bool {
    if (idx == order.size()) {
      for (int c = 1; c <= k; ++c)
        if (used[static_cast<size_t>(c - 1)] == 0) return false; // must use all colors
      return true;
    }
    uint32_t v = order[idx];
    for (int ci = 0; ci < k; ++ci) {
      int c = corder[static_cast<size_t>(ci)];
      if (fixed[v] != 0 && fixed[v] != c) continue;
      if (idx == 0 && fixed[v] == 0 && c != 1) continue; // symmetry break
      if (cons.allow && !cons.allow(v, c)) continue;
      if (have_targets && used[static_cast<size_t>(c - 1)] == targets[static_cast<size_t>(c - 1)]) continue;

      // Row bounds for v itself against already-colored neighbours.
      bool ok = true;
      for (int c2 = 0; c2 < k && ok; ++c2)
        if (cnt[v][static_cast<size_t>(c2)] > S.at(c - 1, c2)) ok = false;
      if (!ok) continue;
      // Bounds for colored neighbours gaining a c-neighbour.
      size_t t = static_cast<size_t>(v) * static_cast<size_t>(deg);
      for (int e = 0; e < deg && ok; ++e) {
        uint32_t u = adj[t + static_cast<size_t>(e)];
        if (col[u] != 0 && cnt[u][static_cast<size_t>(c - 1)] + 1 > S.at(col[u] - 1, c - 1))
          ok = false;
      }
      if (!ok) continue;

      if (!bud.tick()) return false;
      col[v] = static_cast<uint8_t>(c);
      ++used[static_cast<size_t>(c - 1)];
      for (int e = 0; e < deg; ++e) {
        uint32_t u = adj[t + static_cast<size_t>(e)];
        ++cnt[u][static_cast<size_t>(c - 1)];
        --unc[u];
      }
      if (go(idx + 1)) return true;
      for (int e = 0; e < deg; ++e) {
        uint32_t u = adj[t + static_cast<size_t>(e)];
        --cnt[u][static_cast<size_t>(c - 1)];
        ++unc[u];
      }
      --used[static_cast<size_t>(c - 1)];
      col[v] = 0;
      if (bud.exhausted) return false;
    }
    return false;
  };

  bool ok = go(0);
  if (bud.exhausted) {
    res.status = SearchStatus::BudgetExhausted;
    return res;
  }
  if (!ok) {
    res.status = SearchStatus::Unsatisfiable;
    return res;
  }

  Coloring c;
  c.spec = spec;
  c.k = k;
  c.colors = std::move(col);
  QuotientResult check = verify_quotient(c, S);
  if (!check.ok())
    throw std::logic_error("find_perfect_coloring: output fails verification");
  res.coloring = std::move(c);
  res.status = SearchStatus::Found;
  return res;
}

int bfs_distance(const GraphSpec& spec, uint64_t u, uint64_t v) {
  validate(spec);
  uint64_t N = num_vertices(spec);
  if (N > 4096) throw DeskScaleExceeded("bfs_distance: graph larger than 4^6");
  if (u >= N || v >= N) throw std::out_of_range("bfs_distance: vertex out of range");
  if (u == v) return 0;
  std::vector<int> dist(N, -1);
  std::queue<uint64_t> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    uint64_t x = q.front();
    q.pop();
    int found = -1;
    for_each_neighbor(spec, x, [&](uint64_t y) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (y == v) found = dist[y];
        q.push(y);
      }
    });
    if (found >= 0) return found;
  }
  throw std::logic_error("bfs_distance: graph not connected");
}

} // namespace doob
