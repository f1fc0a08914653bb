// Composition operators: block-diagonal products, circulant sums, coloring
// multiplication and splitting, tilings, and multifold code partitions.
#include <algorithm>
#include <bit>

#include "construct_util.hpp"
#include "doob/constructions.hpp"
#include "doob/gf.hpp"

namespace doob {

using detail::must_verify;
using detail::quotient_of;
using detail::spec_str;

// ---- diag_product / sum_compose -------------------------------------------

namespace {

// S restricted to rows [r0,r0+k) and columns [c0,c0+k).
QuotientMatrix sub_matrix(const QuotientMatrix& S, int r0, int c0, int k) {
  QuotientMatrix B(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) B.at(i, j) = S.at(r0 + i, c0 + j);
  return B;
}

} // namespace

Coloring diag_product(const Coloring& g, const std::vector<int>& block_sizes,
                      const std::vector<Coloring>& h_list) {
  QuotientMatrix Sg = quotient_of(g, "diag_product");
  int total = 0;
  for (int b : block_sizes) {
    if (b < 1) throw std::invalid_argument("diag_product: block sizes must be positive");
    total += b;
  }
  if (total != g.k)
    throw std::invalid_argument("diag_product: block sizes must partition the colors of g");
  size_t L = block_sizes.size();
  if (h_list.size() != L)
    throw std::invalid_argument("diag_product: need one second-factor coloring per block");

  std::vector<int> offset(L, 0);
  for (size_t i = 1; i < L; ++i) offset[i] = offset[i - 1] + block_sizes[i - 1];

  // Validate the block structure of Sg: circulant diagonal blocks, constant
  // off-diagonal blocks.
  std::vector<std::vector<int>> diag_rows(L);
  std::vector<std::vector<int>> off(L, std::vector<int>(L, 0));
  for (size_t i = 0; i < L; ++i) {
    QuotientMatrix B = sub_matrix(Sg, offset[i], offset[i], block_sizes[i]);
    if (!detail::circulant_row(B, diag_rows[i]))
      throw BlockStructureMismatch("diag_product: diagonal block " + std::to_string(i + 1) +
                                   " of the quotient is not circulant");
    for (size_t j = 0; j < L; ++j) {
      if (i == j) continue;
      int v = Sg.at(offset[i], offset[j]);
      for (int r = 0; r < block_sizes[i]; ++r)
        for (int c = 0; c < block_sizes[j]; ++c)
          if (Sg.at(offset[i] + r, offset[j] + c) != v)
            throw BlockStructureMismatch("diag_product: off-diagonal block (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                         ") of the quotient is not constant");
      off[i][j] = v;
    }
  }

  const GraphSpec& h_spec = h_list[0].spec;
  std::vector<QuotientMatrix> Sh(L);
  std::vector<std::vector<int>> h_rows(L);
  for (size_t i = 0; i < L; ++i) {
    if (!(h_list[i].spec == h_spec))
      throw std::invalid_argument("diag_product: second-factor colorings live on different graphs");
    if (h_list[i].k != block_sizes[i])
      throw std::invalid_argument("diag_product: block " + std::to_string(i + 1) +
                                  " color count does not match its second-factor coloring");
    Sh[i] = quotient_of(h_list[i], "diag_product");
    if (!detail::circulant_row(Sh[i], h_rows[i]))
      throw BlockStructureMismatch("diag_product: second-factor quotient " +
                                   std::to_string(i + 1) + " is not circulant");
  }

  GraphSpec target = product_spec(g.spec, h_spec);
  detail::require_exhaustive(target, "diag_product");
  Coloring out;
  out.spec = target;
  out.k = g.k;
  out.colors.resize(num_vertices(target));
  std::vector<int> block_of(static_cast<size_t>(g.k)), pos_of(static_cast<size_t>(g.k));
  for (size_t i = 0; i < L; ++i)
    for (int p = 0; p < block_sizes[i]; ++p) {
      block_of[static_cast<size_t>(offset[i] + p)] = static_cast<int>(i);
      pos_of[static_cast<size_t>(offset[i] + p)] = p;
    }
  for (uint64_t x = 0; x < num_vertices(g.spec); ++x) {
    int gi = block_of[static_cast<size_t>(g.colors[x] - 1)];
    int gp = pos_of[static_cast<size_t>(g.colors[x] - 1)];
    for (uint64_t y = 0; y < num_vertices(h_spec); ++y) {
      int hp = h_list[static_cast<size_t>(gi)].colors[y] - 1;
      int c = offset[static_cast<size_t>(gi)] + (gp + hp) % block_sizes[static_cast<size_t>(gi)];
      out.colors[product_index(g.spec, h_spec, x, y)] = static_cast<uint8_t>(c + 1);
    }
  }

  QuotientMatrix St(g.k);
  for (size_t i = 0; i < L; ++i) {
    for (int r = 0; r < block_sizes[i]; ++r)
      for (int c = 0; c < block_sizes[i]; ++c) {
        int d = (c - r + block_sizes[i]) % block_sizes[i];
        St.at(offset[i] + r, offset[i] + c) =
            diag_rows[i][static_cast<size_t>(d)] + h_rows[i][static_cast<size_t>(d)];
      }
    for (size_t j = 0; j < L; ++j) {
      if (i == j) continue;
      for (int r = 0; r < block_sizes[i]; ++r)
        for (int c = 0; c < block_sizes[j]; ++c)
          St.at(offset[i] + r, offset[j] + c) = off[i][j];
    }
  }
  must_verify(out, St, "diag_product");
  return out;
}

Coloring sum_compose(const Coloring& g, const Coloring& h) {
  if (g.k != h.k) throw std::invalid_argument("sum_compose: color counts differ");
  return diag_product(g, {g.k}, {h});
}

// ---- multiply -------------------------------------------------------------

namespace {

// Greedy per-coordinate factor widths b_j with b_j = k (mod 2), sum np.
std::vector<int> factor_widths(int n, int k, int np) {
  std::vector<int> bs(static_cast<size_t>(n), 0);
  int left = np;
  for (int j = 0; j < n; ++j) {
    int rest = n - 1 - j;
    int lo = (k % 2) * rest;
    int b = std::min(k, left - lo);
    b -= (b - k) & 1; // match parity of k
    if (b < k % 2 || left - b < lo || left - b > k * rest)
      throw std::invalid_argument("multiply/split: no factor decomposition for the requested target");
    bs[static_cast<size_t>(j)] = b;
    left -= b;
  }
  if (left != 0)
    throw std::invalid_argument("multiply/split: no factor decomposition for the requested target");
  return bs;
}

} // namespace

Coloring multiply_coloring(const Coloring& g, int k, int mp, int np) {
  QuotientMatrix Sg = quotient_of(g, "multiply_coloring");
  if (k < 2) throw std::invalid_argument("multiply_coloring: k >= 2 required");
  const GraphSpec& s = g.spec;
  if (2 * mp + np != k * s.n)
    throw std::invalid_argument("multiply_coloring: need 2m'+n' = k*n");
  GraphSpec target{s.m * k + mp, np};
  validate(target);
  detail::require_exhaustive(target, "multiply_coloring");
  std::vector<int> bs = factor_widths(s.n, k, np);

  // Coordinate layout in the target: k Shrikhande coordinates per original
  // Shrikhande coordinate, then one factor D(a_j, b_j) per original K4
  // coordinate with 2a_j + b_j = k.
  struct Factor {
    int shr0 = 0, a = 0, k40 = 0, b = 0;
  };
  std::vector<Factor> fac(static_cast<size_t>(s.n));
  {
    int shr = s.m * k, k4 = 0;
    for (int j = 0; j < s.n; ++j) {
      int b = bs[static_cast<size_t>(j)];
      fac[static_cast<size_t>(j)] = {shr, (k - b) / 2, k4, b};
      shr += (k - b) / 2;
      k4 += b;
    }
  }

  Coloring out;
  out.spec = target;
  out.k = g.k;
  uint64_t N = num_vertices(target);
  out.colors.resize(N);
  for (uint64_t w = 0; w < N; ++w) {
    uint64_t z = 0;
    for (int i = 0; i < s.m; ++i) {
      int acc = 0;
      for (int t = 0; t < k; ++t)
        acc = shrik::add(acc, static_cast<int>((w >> shr_shift(target, i * k + t)) & 15));
      z = (z << 4) | static_cast<uint64_t>(acc);
    }
    for (int j = 0; j < s.n; ++j) {
      const Factor& F = fac[static_cast<size_t>(j)];
      int acc = 0;
      for (int t = 0; t < F.a; ++t)
        acc = gf4_add(acc, shrikhande_label_packed(
                               static_cast<int>((w >> shr_shift(target, F.shr0 + t)) & 15)));
      for (int t = 0; t < F.b; ++t)
        acc = gf4_add(acc, gf4_of_z4(static_cast<int>((w >> k4_shift(target, F.k40 + t)) & 3)));
      z = (z << 2) | static_cast<uint64_t>(z4_of_gf4(acc));
    }
    out.colors[w] = g.colors[z];
  }
  must_verify(out, scaled(Sg, k), "multiply_coloring");
  return out;
}

// ---- split ----------------------------------------------------------------

Coloring split_coloring(const Coloring& g, int c) {
  QuotientMatrix Sg = quotient_of(g, "split_coloring");
  const GraphSpec& s = g.spec;
  if (c < 0 || c > 2 * s.n)
    throw std::invalid_argument("split_coloring: c must be in [0, 2n]");
  GraphSpec target{4 * s.m + c, 4 * s.n - 2 * c};
  validate(target);
  detail::require_exhaustive(target, "split_coloring");

  // Per original K4 coordinate: a diameter-4 factor D(a_j, 4-2a_j).
  struct Factor {
    GraphSpec fspec;
    int shr0 = 0, k40 = 0;
  };
  std::vector<Factor> fac(static_cast<size_t>(s.n));
  std::vector<MultipartiteColoring> mp_by_a(3);
  std::vector<bool> have_mp(3, false);
  {
    int left = c, shr = 4 * s.m, k4 = 0;
    for (int j = 0; j < s.n; ++j) {
      int a = std::min(2, left);
      left -= a;
      fac[static_cast<size_t>(j)] = {GraphSpec{a, 4 - 2 * a}, shr, k4};
      shr += a;
      k4 += 4 - 2 * a;
      if (!have_mp[static_cast<size_t>(a)]) {
        mp_by_a[static_cast<size_t>(a)] = multipartite(2, GraphSpec{a, 4 - 2 * a});
        have_mp[static_cast<size_t>(a)] = true;
      }
    }
  }

  Coloring out;
  out.spec = target;
  out.k = 4 * g.k;
  uint64_t N = num_vertices(target);
  out.colors.resize(N);
  for (uint64_t w = 0; w < N; ++w) {
    uint64_t z = 0;
    int tsum = 0; // Z4 sum of the residual labels
    for (int i = 0; i < s.m; ++i) {
      int d[4];
      for (int t = 0; t < 4; ++t)
        d[t] = static_cast<int>((w >> shr_shift(target, 4 * i + t)) & 15);
      z = (z << 4) | static_cast<uint64_t>(
                         shrik::add(shrik::add(d[0], d[1]), shrik::add(d[2], d[3])));
      int t_i = gf4_add(shrikhande_label_packed(d[1]),
                        gf4_add(gf4_mul(shrikhande_label_packed(d[2]), 2),
                                gf4_mul(shrikhande_label_packed(d[3]), 3)));
      tsum = (tsum + t_i) & 3;
    }
    for (int j = 0; j < s.n; ++j) {
      const Factor& F = fac[static_cast<size_t>(j)];
      uint64_t sub = 0;
      for (int t = 0; t < F.fspec.m; ++t)
        sub = (sub << 4) | ((w >> shr_shift(target, F.shr0 + t)) & 15);
      for (int t = 0; t < F.fspec.n; ++t)
        sub = (sub << 2) | ((w >> k4_shift(target, F.k40 + t)) & 3);
      const MultipartiteColoring& mp = mp_by_a[static_cast<size_t>(F.fspec.m)];
      int col = mp.coloring.colors[sub];
      z = (z << 2) | static_cast<uint64_t>(mp.part(col));
      tsum = (tsum + mp.slice(col)) & 3;
    }
    out.colors[w] = static_cast<uint8_t>((g.colors[z] - 1) * 4 + tsum + 1);
  }

  QuotientMatrix St(4 * g.k);
  for (int i = 0; i < g.k; ++i)
    for (int j = 0; j < g.k; ++j)
      for (int r = 0; r < 4; ++r)
        for (int q = 0; q < 4; ++q) St.at(4 * i + r, 4 * j + q) = Sg.at(i, j);
  must_verify(out, St, "split_coloring");
  return out;
}

// ---- tiling ---------------------------------------------------------------

TilingResult tiling_compose(const Coloring& g, const std::vector<Coloring>& family) {
  QuotientMatrix Sg = quotient_of(g, "tiling_compose");
  int K = g.k;
  if (static_cast<int>(family.size()) != K)
    throw std::invalid_argument("tiling_compose: family size must equal the color count of g");
  // Sg must be k(J-E) + aE.
  int kk = (K > 1) ? Sg.at(0, 1) : 0;
  int aa = Sg.at(0, 0);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      if (Sg.at(i, j) != ((i == j) ? aa : kk))
        throw BlockStructureMismatch("tiling_compose: quotient of g is not k(J-E)+aE");

  const GraphSpec& fs = family[0].spec;
  QuotientMatrix Sf = quotient_of(family[0], "tiling_compose");
  if (Sf.k != 2) throw std::invalid_argument("tiling_compose: family members must be 2-colorings");
  for (const Coloring& f : family) {
    if (!(f.spec == fs))
      throw std::invalid_argument("tiling_compose: family members live on different graphs");
    if (f.k != 2) throw std::invalid_argument("tiling_compose: family members must be 2-colorings");
    QuotientMatrix S = quotient_of(f, "tiling_compose");
    if (!(S == Sf))
      throw std::invalid_argument("tiling_compose: family members have different quotients");
  }
  uint64_t Nf = num_vertices(fs);
  int r = -1;
  for (uint64_t y = 0; y < Nf; ++y) {
    int cnt = 0;
    for (const Coloring& f : family) cnt += (f.colors[y] == 1);
    if (r < 0) r = cnt;
    if (cnt != r)
      throw ConditionViolated(3, "tiling_compose: family coverage is not constant");
  }

  GraphSpec target = product_spec(g.spec, fs);
  detail::require_exhaustive(target, "tiling_compose");
  TilingResult out;
  out.spec = target;
  out.coverage = r;
  out.quotient = QuotientMatrix(2);
  out.quotient.at(0, 0) = Sf.at(0, 0) + aa + (r - 1) * kk;
  out.quotient.at(0, 1) = Sf.at(0, 1) + (K - r) * kk;
  out.quotient.at(1, 0) = Sf.at(1, 0) + r * kk;
  out.quotient.at(1, 1) = Sf.at(1, 1) + (K - r - 1) * kk + aa;

  uint64_t Ng = num_vertices(g.spec);
  for (int i = 0; i < K; ++i) {
    Coloring f;
    f.spec = target;
    f.k = 2;
    f.colors.resize(num_vertices(target));
    for (uint64_t x = 0; x < Ng; ++x) {
      const Coloring& pick = family[static_cast<size_t>((g.colors[x] - 1 + i) % K)];
      for (uint64_t y = 0; y < Nf; ++y)
        f.colors[product_index(g.spec, fs, x, y)] = pick.colors[y];
    }
    must_verify(f, out.quotient, "tiling_compose");
    out.colorings.push_back(std::move(f));
  }
  return out;
}

// ---- multifold partitions -------------------------------------------------

MultifoldPartition multifold_partition(const GraphSpec& spec) {
  validate(spec);
  int D = diameter_param(spec);
  if (D % 4 != 1)
    throw NotAdmissible("multifold_partition: requires 2m+n = 1 (mod 4)");
  unsigned ball = static_cast<unsigned>(degree(spec)) + 1;
  MultifoldPartition out;
  out.spec = spec;
  out.k = std::countr_zero(ball);
  out.alpha = static_cast<int>(ball >> out.k);
  if (D <= 5) {
    CodePartition cp = perfect_code_partition(spec);
    out.codes = std::move(cp.codes);
    return out;
  }
  if (D == 9) {
    // 3J on the diameter-8 first factor, merged in pairs to 6(J-E)+6E, tiled
    // with the four singleton 2-colorings of K4.
    Coloring tj = three_j(GraphSpec{spec.m, spec.n - 1});
    Coloring g = merge_colors(tj, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    GraphSpec k4{0, 1};
    std::vector<Coloring> family;
    for (int j = 0; j < 4; ++j) {
      Coloring f;
      f.spec = k4;
      f.k = 2;
      f.colors = {2, 2, 2, 2};
      f.colors[static_cast<size_t>(j)] = 1;
      family.push_back(std::move(f));
    }
    TilingResult t = tiling_compose(g, family);
    for (const Coloring& f : t.colorings) {
      Code c = color_class(f, 1);
      if (!is_mu_fold_perfect(c, out.alpha))
        throw std::logic_error("multifold_partition: tile is not a multifold perfect code");
      out.codes.push_back(std::move(c));
    }
    return out;
  }
  throw DeskScaleExceeded("multifold_partition: " + spec_str(spec) +
                          " exceeds the exhaustive range");
}

} // namespace doob
