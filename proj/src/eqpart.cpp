#include "doob/eqpart.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace doob {

int worker_threads() {
  if (const char* e = std::getenv("EQPART_THREADS")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string QuotientMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    if (i + 1 < k) os << "; ";
  }
  return os.str();
}

QuotientMatrix j_minus_e(int k, int scale) {
  QuotientMatrix S(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) S.at(i, j) = (i == j) ? 0 : scale;
  return S;
}

QuotientMatrix j_matrix(int k, int scale) {
  QuotientMatrix S(k);
  for (int& x : S.s) x = scale;
  return S;
}

QuotientMatrix scaled(const QuotientMatrix& S, int c) {
  QuotientMatrix R = S;
  for (int& x : R.s) x *= c;
  return R;
}

QuotientMatrix plus_diag(const QuotientMatrix& S, int a) {
  QuotientMatrix R = S;
  for (int i = 0; i < R.k; ++i) R.at(i, i) += a;
  return R;
}

bool Coloring::surjective() const {
  std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
  for (uint8_t c : colors) {
    if (c < 1 || c > k) return false;
    seen[c] = 1;
  }
  for (int c = 1; c <= k; ++c)
    if (!seen[static_cast<size_t>(c)]) return false;
  return true;
}

Code Code::empty(const GraphSpec& s) {
  Code c;
  c.spec = s;
  c.bits.assign(static_cast<size_t>((num_vertices(s) + 63) / 64), 0);
  return c;
}

uint64_t Code::size() const {
  uint64_t n = 0;
  for (uint64_t w : bits) n += static_cast<uint64_t>(__builtin_popcountll(w));
  return n;
}

std::vector<uint64_t> Code::members() const {
  std::vector<uint64_t> out;
  for (size_t wi = 0; wi < bits.size(); ++wi) {
    uint64_t w = bits[wi];
    while (w) {
      int b = __builtin_ctzll(w);
      out.push_back((static_cast<uint64_t>(wi) << 6) | static_cast<uint64_t>(b));
      w &= w - 1;
    }
  }
  return out;
}

bool Code::disjoint_with(const Code& other) const {
  size_t n = std::min(bits.size(), other.bits.size());
  for (size_t i = 0; i < n; ++i)
    if (bits[i] & other.bits[i]) return false;
  return true;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ']';
  return os.str();
}

std::string NotEquitable::to_string() const {
  std::ostringstream os;
  os << "vertex " << vertex << " (color " << color << "): expected row [";
  for (size_t i = 0; i < expected_row.size(); ++i)
    os << (i ? "," : "") << expected_row[i];
  os << "], observed [";
  for (size_t i = 0; i < observed_row.size(); ++i)
    os << (i ? "," : "") << observed_row[i];
  os << "]";
  return os.str();
}

namespace {

void check_exhaustive_range(const GraphSpec& s) {
  if (num_vertices(s) > kExhaustiveLimit)
    throw std::runtime_error(
        "exhaustive verification limited to 4^12 vertices; use the "
        "coset-representative or sampled entry points for larger graphs");
}

// Counts neighbour colors of v into row (size k, 0-based by color-1).
inline void neighbor_counts(const GraphSpec& s, const Coloring& c, uint64_t v,
                            int* row) {
  for_each_neighbor(s, v, [&](uint64_t u) { ++row[c.colors[u] - 1]; });
}

// Scans [lo,hi) for the first vertex whose neighbour counts differ from the
// candidate row of its color. Returns index or UINT64_MAX.
uint64_t scan_range(const GraphSpec& s, const Coloring& c,
                    const QuotientMatrix& S, uint64_t lo, uint64_t hi) {
  std::vector<int> row(static_cast<size_t>(c.k));
  for (uint64_t v = lo; v < hi; ++v) {
    std::fill(row.begin(), row.end(), 0);
    neighbor_counts(s, c, v, row.data());
    const int* want = &S.s[static_cast<size_t>(c.colors[v] - 1) * static_cast<size_t>(c.k)];
    for (int j = 0; j < c.k; ++j)
      if (row[static_cast<size_t>(j)] != want[j]) return v;
  }
  return UINT64_MAX;
}

QuotientResult verify_against(const Coloring& c, const QuotientMatrix& S) {
  const GraphSpec& s = c.spec;
  uint64_t N = num_vertices(s);
  int nt = worker_threads();
  uint64_t chunk = (N + static_cast<uint64_t>(nt) - 1) / static_cast<uint64_t>(nt);
  std::vector<uint64_t> firsts(static_cast<size_t>(nt), UINT64_MAX);
  std::vector<std::thread> threads;
  for (int t = 0; t < nt; ++t) {
    uint64_t lo = static_cast<uint64_t>(t) * chunk, hi = std::min(N, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, t, lo, hi] { firsts[static_cast<size_t>(t)] = scan_range(s, c, S, lo, hi); });
  }
  for (auto& th : threads) th.join();
  uint64_t bad = *std::min_element(firsts.begin(), firsts.end());
  QuotientResult r;
  if (bad == UINT64_MAX) {
    r.matrix = S;
    return r;
  }
  NotEquitable ne;
  ne.vertex = bad;
  ne.color = c.colors[bad];
  ne.expected_row.assign(S.s.begin() + static_cast<long>(ne.color - 1) * S.k,
                         S.s.begin() + static_cast<long>(ne.color) * S.k);
  std::vector<int> row(static_cast<size_t>(c.k), 0);
  neighbor_counts(s, c, bad, row.data());
  ne.observed_row = row;
  r.failure = ne;
  return r;
}

} // namespace

QuotientResult compute_quotient(const Coloring& c) {
  check_exhaustive_range(c.spec);
  if (c.colors.size() != num_vertices(c.spec))
    throw std::invalid_argument("coloring length does not match spec");
  if (!c.surjective())
    throw std::invalid_argument("coloring is not surjective onto {1..k}");
  // Candidate rows from the first vertex of each color, then verify all.
  QuotientMatrix S(c.k);
  std::vector<char> have(static_cast<size_t>(c.k), 0);
  int remaining = c.k;
  std::vector<int> row(static_cast<size_t>(c.k));
  for (uint64_t v = 0; v < num_vertices(c.spec) && remaining; ++v) {
    int col = c.colors[v] - 1;
    if (have[static_cast<size_t>(col)]) continue;
    std::fill(row.begin(), row.end(), 0);
    neighbor_counts(c.spec, c, v, row.data());
    for (int j = 0; j < c.k; ++j) S.at(col, j) = row[static_cast<size_t>(j)];
    have[static_cast<size_t>(col)] = 1;
    --remaining;
  }
  return verify_against(c, S);
}

QuotientResult verify_quotient(const Coloring& c, const QuotientMatrix& S) {
  check_exhaustive_range(c.spec);
  if (S.k != c.k) throw std::invalid_argument("matrix size does not match color count");
  if (!c.surjective())
    throw std::invalid_argument("coloring is not surjective onto {1..k}");
  return verify_against(c, S);
}

BcResult is_perfect_bc(const Coloring& c) {
  BcResult r;
  if (c.k != 2) {
    r.error = "expected a 2-coloring, got k=" + std::to_string(c.k);
    return r;
  }
  QuotientResult q = compute_quotient(c);
  if (!q.ok()) {
    r.failure = q.failure;
    return r;
  }
  r.bc = {q.matrix->at(0, 1), q.matrix->at(1, 0)};
  return r;
}

int code_distance(const Code& c) {
  auto mem = c.members();
  if (mem.size() < 2) throw std::invalid_argument("code distance needs at least 2 codewords");
  int best = INT32_MAX;
  int nt = worker_threads();
  std::vector<int> bests(static_cast<size_t>(nt), INT32_MAX);
  std::vector<std::thread> threads;
  size_t M = mem.size();
  for (int t = 0; t < nt; ++t) {
    threads.emplace_back([&, t] {
      int local = INT32_MAX;
      for (size_t i = static_cast<size_t>(t); i < M; i += static_cast<size_t>(nt))
        for (size_t j = i + 1; j < M; ++j) {
          int d = distance(c.spec, mem[i], mem[j]);
          if (d < local) local = d;
        }
      bests[static_cast<size_t>(t)] = local;
    });
  }
  for (auto& th : threads) th.join();
  for (int b : bests) best = std::min(best, b);
  return best;
}

namespace {

std::vector<uint8_t> distance_classes(const Code& c, int& rho) {
  uint64_t N = num_vertices(c.spec);
  std::vector<uint8_t> dist(N, 255);
  std::queue<uint64_t> q;
  for (uint64_t v : c.members()) {
    dist[v] = 0;
    q.push(v);
  }
  if (q.empty()) throw std::invalid_argument("empty code");
  rho = 0;
  while (!q.empty()) {
    uint64_t v = q.front();
    q.pop();
    uint8_t d = dist[v];
    rho = std::max(rho, static_cast<int>(d));
    for_each_neighbor(c.spec, v, [&](uint64_t u) {
      if (dist[u] == 255) {
        dist[u] = static_cast<uint8_t>(d + 1);
        q.push(u);
      }
    });
  }
  return dist;
}

} // namespace

int covering_radius(const Code& c) {
  check_exhaustive_range(c.spec);
  int rho = 0;
  distance_classes(c, rho);
  return rho;
}

CrcResult completely_regular_check(const Code& c) {
  check_exhaustive_range(c.spec);
  CrcResult r;
  int rho = 0;
  auto dist = distance_classes(c, rho);
  Coloring f;
  f.spec = c.spec;
  f.k = rho + 1;
  f.colors.resize(dist.size());
  for (size_t i = 0; i < dist.size(); ++i) f.colors[i] = static_cast<uint8_t>(dist[i] + 1);
  QuotientResult q = compute_quotient(f);
  if (!q.ok()) {
    r.failure = q.failure;
    return r;
  }
  const QuotientMatrix& S = *q.matrix;
  for (int i = 0; i < S.k; ++i)
    for (int j = 0; j < S.k; ++j)
      if (std::abs(i - j) > 1 && S.at(i, j) != 0) {
        NotEquitable ne;
        ne.vertex = 0;
        ne.color = i + 1;
        ne.expected_row.assign(static_cast<size_t>(S.k), 0);
        ne.observed_row.assign(S.s.begin() + static_cast<long>(i) * S.k,
                               S.s.begin() + static_cast<long>(i + 1) * S.k);
        r.failure = ne;
        return r;
      }
  IntersectionArray arr;
  for (int i = 0; i < rho; ++i) arr.values.push_back(S.at(i, i + 1));
  for (int i = 1; i <= rho; ++i) arr.values.push_back(S.at(i, i - 1));
  r.array = arr;
  r.quotient = S;
  return r;
}

bool is_mu_fold_perfect(const Code& c, int mu) {
  const GraphSpec& s = c.spec;
  uint64_t N = num_vertices(s);
  int nt = worker_threads();
  std::vector<char> oks(static_cast<size_t>(nt), 1);
  std::vector<std::thread> threads;
  uint64_t chunk = (N + static_cast<uint64_t>(nt) - 1) / static_cast<uint64_t>(nt);
  for (int t = 0; t < nt; ++t) {
    uint64_t lo = static_cast<uint64_t>(t) * chunk, hi = std::min(N, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, t, lo, hi] {
      for (uint64_t v = lo; v < hi; ++v) {
        int cnt = c.contains(v) ? 1 : 0;
        for_each_neighbor(s, v, [&](uint64_t u) { cnt += c.contains(u) ? 1 : 0; });
        if (cnt != mu) {
          oks[static_cast<size_t>(t)] = 0;
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (char ok : oks)
    if (!ok) return false;
  return true;
}

namespace {
bool is_pow2(long long v) { return v > 0 && (v & (v - 1)) == 0; }
} // namespace

ConditionReport necessary_conditions(int b, int c, const GraphSpec& spec) {
  ConditionReport r;
  if (b < 1 || c < 1) throw std::invalid_argument("b,c must be >= 1");
  long long g = std::gcd(b, c);
  if (!is_pow2((b + c) / g)) {
    r.pass = false;
    r.violations.push_back("(b+c)/gcd(b,c) = " + std::to_string((b + c) / g) +
                           " is not a power of 2");
  }
  int sum = b + c;
  if (sum % 4 != 0 || sum / 4 < 1 || sum / 4 > diameter_param(spec)) {
    r.pass = false;
    r.violations.push_back("b+c = " + std::to_string(sum) +
                           " is not 4i with 1 <= i <= " + std::to_string(diameter_param(spec)));
  }
  auto check_one = [&](int other, const char* side) {
    // other = the non-1 parameter when its partner equals 1
    long long p = other + 1;
    bool pow4 = false;
    for (long long q = 4; q <= p; q *= 4)
      if (q == p) pow4 = true;
    if (!pow4) {
      r.pass = false;
      r.violations.push_back(std::string(side) + " = 1 requires the partner to be 4^l - 1");
    }
    if (spec.n == 0) {
      r.pass = false;
      r.violations.push_back(std::string(side) + " = 1 requires n != 0");
    }
    if (other % 3 != 0) {
      r.pass = false;
      r.violations.push_back("partner of the 1-side must be divisible by 3");
    }
    if (spec.n == 0 && other % 6 != 0) {
      r.pass = false;
      r.violations.push_back("partner of the 1-side must be divisible by 6 when n = 0");
    }
  };
  if (c == 1) check_one(b, "c");
  if (b == 1 && c != 1) check_one(c, "b");
  if (b == 1 || c == 1)
    r.notes.push_back(
        "divisibility-by-3 condition follows the cycle-counting argument "
        "(the commonly printed form 'b+1 divisible by 3' is inconsistent "
        "with it and with b = 4^l - 1)");
  return r;
}

AdmissibilityRecord admissibility(int b, int c) {
  if (b < 1 || c < 1) throw std::invalid_argument("b,c must be >= 1");
  AdmissibilityRecord rec;
  long long g = std::gcd(b, c);
  long long q = (b + c) / g;
  bool qpow2 = is_pow2(q);
  bool qpow4 = false;
  for (long long t = 4; t <= q; t *= 4)
    if (t == q) qpow4 = true;
  bool qodd2 = false; // q = 2^(2l-1), an odd power of two >= 8
  for (long long t = 8; t <= q; t *= 4)
    if (t == q) qodd2 = true;
  if (q == 2) qodd2 = true; // 2^(2*1-1)

  auto is_4l_minus1 = [](int v) {
    for (long long t = 4;; t *= 4) {
      if (t - 1 == v) return true;
      if (t - 1 > v) return false;
    }
  };
  auto upd = [&](int a, int item) {
    rec.items.push_back(item);
    if (!rec.best_a || a < *rec.best_a) rec.best_a = a;
  };
  if ((c == 1 && is_4l_minus1(b)) || (b == 1 && is_4l_minus1(c))) {
    rec.inf_admissible = true;
    rec.items.push_back(1);
    upd(1, 3);
  }
  if (b != 1 && c != 1 && qpow2) {
    rec.inf_admissible = true;
    rec.items.push_back(2);
  }
  if (g >= 2 && qpow2) upd(0, 4);
  if (g == 1 && qpow4 && b != 1 && c != 1) upd(1, 5);
  if (g == 1 && qodd2 && b != 1 && c != 1) upd(8, 6);
  std::sort(rec.items.begin(), rec.items.end());
  rec.items.erase(std::unique(rec.items.begin(), rec.items.end()), rec.items.end());
  return rec;
}

std::string AdmissibilityRecord::to_string() const {
  std::ostringstream os;
  if (!admissible()) {
    os << "not admissible";
    return os.str();
  }
  bool first = true;
  if (inf_admissible) {
    os << "inf-admissible";
    first = false;
  }
  if (best_a) {
    if (!first) os << ", ";
    os << *best_a << "-admissible";
  }
  os << " (items:";
  for (int i : items) os << ' ' << i;
  os << ')';
  return os.str();
}

MultifoldExistence multifold_exists(const GraphSpec& spec, int mu) {
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  MultifoldExistence r;
  int ballsz = degree(spec) + 1; // 6m+3n+1
  int k = 0, a = ballsz;
  while (a % 2 == 0) {
    a /= 2;
    ++k;
  }
  r.alpha = a;
  r.k = k;
  if (diameter_param(spec) % 4 != 1) return r;
  if (mu % a != 0) return r;
  int l = mu / a;
  if (l < 1 || l > (1 << k)) return r;
  r.exists = true;
  r.l = l;
  return r;
}

Coloring merge_colors(const Coloring& c, const std::vector<std::vector<int>>& grouping) {
  std::vector<int> map(static_cast<size_t>(c.k) + 1, 0);
  int newk = static_cast<int>(grouping.size());
  std::vector<char> seen(static_cast<size_t>(c.k) + 1, 0);
  for (int g = 0; g < newk; ++g)
    for (int col : grouping[static_cast<size_t>(g)]) {
      if (col < 1 || col > c.k || seen[static_cast<size_t>(col)])
        throw std::invalid_argument("grouping is not a partition of {1..k}");
      seen[static_cast<size_t>(col)] = 1;
      map[static_cast<size_t>(col)] = g + 1;
    }
  for (int col = 1; col <= c.k; ++col)
    if (!seen[static_cast<size_t>(col)])
      throw std::invalid_argument("grouping is not a partition of {1..k}");
  Coloring out;
  out.spec = c.spec;
  out.k = newk;
  out.colors.resize(c.colors.size());
  for (size_t i = 0; i < c.colors.size(); ++i)
    out.colors[i] = static_cast<uint8_t>(map[c.colors[i]]);
  return out;
}

Code color_class(const Coloring& c, int color) {
  Code code = Code::empty(c.spec);
  for (uint64_t v = 0; v < c.colors.size(); ++v)
    if (c.colors[v] == color) code.insert(v);
  return code;
}

} // namespace doob
