// Perfect 2-colorings with prescribed quotient [[deg-b, b], [c, deg-c]]:
// base families on D(1,0) and H(3,4), the multipartite composition of
// families, and the top-level (b,c) dispatch.
#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "construct_util.hpp"
#include "doob/constructions.hpp"
#include "doob/search.hpp"

namespace doob {

using detail::must_verify;
using detail::spec_str;

namespace {

QuotientMatrix bc_quotient(const GraphSpec& spec, int b, int c) {
  int deg = degree(spec);
  QuotientMatrix S(2);
  S.at(0, 0) = deg - b;
  S.at(0, 1) = b;
  S.at(1, 0) = c;
  S.at(1, 1) = deg - c;
  return S;
}

Coloring coloring_from_mask(const GraphSpec& spec, uint64_t mask) {
  Coloring f;
  f.spec = spec;
  f.k = 2;
  uint64_t N = num_vertices(spec);
  f.colors.resize(N);
  for (uint64_t v = 0; v < N; ++v) f.colors[v] = ((mask >> v) & 1) ? 1 : 2;
  return f;
}

// Does the vertex subset (bitmask, N <= 64) induce the (b,c) quotient?
bool mask_is_bc(const GraphSpec& spec, uint64_t mask, const QuotientMatrix& S) {
  uint64_t N = num_vertices(spec);
  for (uint64_t v = 0; v < N; ++v) {
    int inside = 0;
    for_each_neighbor(spec, v, [&](uint64_t u) { inside += (mask >> u) & 1; });
    if (inside != S.at(((mask >> v) & 1) ? 0 : 1, 0)) return false;
  }
  return true;
}

Coloring swap_two_colors(const Coloring& f) {
  Coloring g = f;
  for (auto& c : g.colors) c = (c == 1) ? 2 : 1;
  return g;
}

BcFamily finish_family(const GraphSpec& spec, int b, int c,
                       std::vector<Coloring> colorings) {
  BcFamily fam;
  fam.spec = spec;
  fam.b = b;
  fam.c = c;
  fam.colorings = std::move(colorings);
  QuotientMatrix S = bc_quotient(spec, b, c);
  for (const Coloring& f : fam.colorings) must_verify(f, S, "bc_base_family");
  uint64_t N = num_vertices(spec);
  fam.coverage = -1;
  for (uint64_t v = 0; v < N; ++v) {
    int cnt = 0;
    for (const Coloring& f : fam.colorings) cnt += (f.colors[v] == 1);
    if (fam.coverage < 0) fam.coverage = cnt;
    if (cnt != fam.coverage)
      throw std::logic_error("bc_base_family: coverage is not constant");
  }
  if (fam.coverage != c)
    throw std::logic_error("bc_base_family: coverage differs from c");
  return fam;
}

// Exact cover with multiplicity c over candidate color-1 classes; candidates
// may be selected repeatedly.
std::vector<uint64_t> cover_masks(const GraphSpec& spec, const std::vector<uint64_t>& cands,
                                  int c) {
  ExactCoverInstance inst;
  inst.universe = static_cast<uint32_t>(num_vertices(spec));
  inst.mu = c;
  for (uint64_t mask : cands) {
    std::vector<uint32_t> els;
    for (uint32_t v = 0; v < inst.universe; ++v)
      if ((mask >> v) & 1) els.push_back(v);
    for (int rep = 0; rep < c; ++rep) inst.sets.push_back(els);
  }
  ExactCoverResult r = exact_cover(inst);
  if (r.status != SearchStatus::Found) return {};
  std::vector<uint64_t> out;
  for (uint32_t s : r.selected) out.push_back(cands[s / static_cast<uint32_t>(c)]);
  return out;
}

BcFamily base_family_d10(int c) {
  GraphSpec spec{1, 0};
  QuotientMatrix S = bc_quotient(spec, 8 - c, c);
  // Enumerate all candidate color-1 classes (size 2c out of 16 vertices).
  std::vector<uint64_t> cands;
  for (uint64_t mask = 1; mask < (1u << 16); ++mask)
    if (std::popcount(mask) == 2 * c && mask_is_bc(spec, mask, S)) cands.push_back(mask);
  if (c == 4) {
    if (cands.empty()) throw std::logic_error("bc_base_family: no (4,4)-coloring of D(1,0)");
    std::vector<Coloring> cs;
    for (int rep = 0; rep < 4; ++rep) cs.push_back(coloring_from_mask(spec, cands[0]));
    for (int rep = 0; rep < 4; ++rep)
      cs.push_back(coloring_from_mask(spec, ~cands[0] & 0xFFFF));
    return finish_family(spec, 4, 4, std::move(cs));
  }
  std::vector<uint64_t> chosen = cover_masks(spec, cands, c);
  if (chosen.empty())
    throw std::logic_error("bc_base_family: no exact cover among the candidates on D(1,0)");
  std::vector<Coloring> cs;
  for (uint64_t mask : chosen) cs.push_back(coloring_from_mask(spec, mask));
  return finish_family(spec, 8 - c, c, std::move(cs));
}

BcFamily base_family_h34(int c) {
  GraphSpec spec{0, 3};
  QuotientMatrix S = bc_quotient(spec, 8 - c, c);
  uint64_t N = num_vertices(spec);
  std::set<uint64_t> cand_set;
  auto add_translates = [&](uint64_t mask) {
    for (uint64_t t = 0; t < N; ++t) {
      uint64_t tr = 0;
      for (uint64_t v = 0; v < N; ++v)
        if ((mask >> v) & 1) tr |= 1ull << translate(spec, v, t);
      cand_set.insert(tr);
    }
  };
  for (uint64_t seed = 1; seed <= 64; ++seed) {
    SearchBudget budget;
    budget.seed = seed;
    ColoringSearchResult r = find_perfect_coloring(spec, S, {}, budget);
    if (r.status != SearchStatus::Found)
      throw std::logic_error("bc_base_family: no (b,c)-coloring found on H(3,4)");
    uint64_t mask = 0;
    for (uint64_t v = 0; v < N; ++v)
      if (r.coloring->colors[v] == 1) mask |= 1ull << v;
    add_translates(mask);
    if (c == 4) {
      std::vector<Coloring> cs;
      for (int rep = 0; rep < 4; ++rep) cs.push_back(coloring_from_mask(spec, mask));
      for (int rep = 0; rep < 4; ++rep) cs.push_back(coloring_from_mask(spec, ~mask));
      return finish_family(spec, 4, 4, std::move(cs));
    }
    std::vector<uint64_t> cands(cand_set.begin(), cand_set.end());
    std::vector<uint64_t> chosen = cover_masks(spec, cands, c);
    if (!chosen.empty()) {
      std::vector<Coloring> cs;
      for (uint64_t m : chosen) cs.push_back(coloring_from_mask(spec, m));
      return finish_family(spec, 8 - c, c, std::move(cs));
    }
  }
  throw std::logic_error("bc_base_family: no exact cover among the candidates on H(3,4)");
}

} // namespace

BcFamily bc_base_family(const GraphSpec& spec, int c) {
  validate(spec);
  if (c < 2 || c > 6)
    throw std::invalid_argument("bc_base_family: c must be in [2,6]");
  if (c == 5 || c == 6) {
    BcFamily low = bc_base_family(spec, 8 - c);
    std::vector<Coloring> cs;
    for (const Coloring& f : low.colorings) cs.push_back(swap_two_colors(f));
    return finish_family(spec, 8 - c, c, std::move(cs));
  }
  if (spec == GraphSpec{1, 0}) return base_family_d10(c);
  if (spec == GraphSpec{0, 3}) return base_family_h34(c);
  throw UnsupportedSpec("bc_base_family: supported base graphs are D(1,0) and H(3,4)");
}

BcFamily bc_family_compose(const std::array<BcSlot, 4>& slots,
                           const MultipartiteColoring& h) {
  int pow2 = h.pow2();
  const BcFamily* first = nullptr;
  for (const BcSlot& s : slots)
    if (s.kind == BcSlot::Family) {
      if (!s.family) throw std::invalid_argument("bc_family_compose: null family slot");
      first = s.family;
      break;
    }
  if (!first)
    throw std::invalid_argument("bc_family_compose: at least one slot must hold a family");
  const GraphSpec& base = first->spec;
  int sum = 0;
  for (const BcSlot& s : slots) {
    if (s.kind == BcSlot::ConstOne) sum += pow2;
    if (s.kind != BcSlot::Family) continue;
    if (!(s.family->spec == base))
      throw ConditionViolated(1, "bc_family_compose: families live on different graphs");
    if (s.family->b + s.family->c != pow2)
      throw ConditionViolated(1, "bc_family_compose: family (b,c) must sum to 2^k");
    if (static_cast<int>(s.family->colorings.size()) != pow2)
      throw ConditionViolated(2, "bc_family_compose: family must hold 2^k colorings");
    if (s.family->coverage != s.family->c)
      throw ConditionViolated(3, "bc_family_compose: family coverage must equal c");
    sum += s.family->c;
  }

  // Slot colorings; constant slots contribute all-1 / all-2 maps.
  uint64_t Nb = num_vertices(base);
  auto slot_color = [&](int slot, int j, uint64_t y) -> uint8_t {
    const BcSlot& s = slots[static_cast<size_t>(slot)];
    if (s.kind == BcSlot::ConstOne) return 1;
    if (s.kind == BcSlot::ConstTwo) return 2;
    return s.family->colorings[static_cast<size_t>(j)].colors[y];
  };

  GraphSpec target = product_spec(h.coloring.spec, base);
  detail::require_exhaustive(target, "bc_family_compose");
  BcFamily out;
  out.spec = target;
  out.c = sum;
  out.b = 4 * pow2 - sum;
  out.coverage = sum;
  QuotientMatrix S = bc_quotient(target, out.b, out.c);

  uint64_t Nh = num_vertices(h.coloring.spec);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < pow2; ++j) {
      Coloring f;
      f.spec = target;
      f.k = 2;
      f.colors.resize(num_vertices(target));
      for (uint64_t x = 0; x < Nh; ++x) {
        int hc = h.coloring.colors[x];
        int slot = (h.part(hc) + i) & 3;
        int sub = (h.slice(hc) + j) % pow2;
        for (uint64_t y = 0; y < Nb; ++y)
          f.colors[product_index(h.coloring.spec, base, x, y)] = slot_color(slot, sub, y);
      }
      must_verify(f, S, "bc_family_compose");
      out.colorings.push_back(std::move(f));
    }

  uint64_t Nt = num_vertices(target);
  for (uint64_t v = 0; v < Nt; ++v) {
    int cnt = 0;
    for (const Coloring& f : out.colorings) cnt += (f.colors[v] == 1);
    if (cnt != out.coverage)
      throw std::logic_error("bc_family_compose: composed coverage is not constant");
  }
  return out;
}

// ---- top-level dispatch ---------------------------------------------------

namespace {

BcColoring finish_bc(Coloring f, int b, int c, std::string method) {
  BcColoring out;
  out.spec = f.spec;
  out.quotient = bc_quotient(f.spec, b, c);
  must_verify(f, out.quotient, "build_bc_coloring");
  out.coloring = std::move(f);
  out.method = std::move(method);
  return out;
}

// Halved-sum coloring: color 1 iff the number of symbols in {2,3} is even.
BcColoring bc_equal(int b) {
  if (b % 2 != 0)
    throw NotAdmissible("build_bc_coloring: (b,b) requires even b");
  GraphSpec spec{0, b / 2};
  validate(spec);
  detail::require_exhaustive(spec, "build_bc_coloring");
  Coloring f;
  f.spec = spec;
  f.k = 2;
  uint64_t N = num_vertices(spec);
  f.colors.resize(N);
  for (uint64_t v = 0; v < N; ++v) {
    int par = 0;
    uint64_t x = v;
    for (int j = 0; j < spec.n; ++j) {
      par ^= static_cast<int>((x >> 1) & 1);
      x >>= 2;
    }
    f.colors[v] = par ? 2 : 1;
  }
  return finish_bc(std::move(f), b, b, "half-sum parity coloring of H(" +
                                           std::to_string(b / 2) + ",4)");
}

// Union of the first c codes of a 1-perfect code partition.
BcColoring bc_code_union(int b, int c, int l, BcPreference pref) {
  GraphSpec spec =
      (l == 1) ? GraphSpec{0, 1}
               : ((pref == BcPreference::PreferDoob) ? GraphSpec{2, 1} : GraphSpec{0, 5});
  CodePartition cp = perfect_code_partition(spec);
  Coloring f;
  f.spec = spec;
  f.k = 2;
  f.colors.resize(num_vertices(spec));
  for (uint64_t v = 0; v < num_vertices(spec); ++v)
    f.colors[v] = (cp.coloring.colors[v] <= c) ? 1 : 2;
  return finish_bc(std::move(f), b, c,
                   "union of " + std::to_string(c) + " disjoint 1-perfect codes in " +
                       spec_str(spec));
}

// First r colors of a g(J-E)+aE coloring against the rest.
BcColoring bc_scaled_merge(Coloring base, int r, int b, int c, std::string method) {
  std::vector<std::vector<int>> groups(2);
  for (int col = 1; col <= base.k; ++col) groups[(col <= r) ? 0 : 1].push_back(col);
  Coloring merged = merge_colors(base, groups);
  return finish_bc(std::move(merged), b, c, std::move(method));
}

// 8-coloring of H(5,4) with quotient 2(J-E)+E: Hamming cosets merged in
// syndrome pairs.
Coloring paired_coset_coloring() {
  CodePartition cp = perfect_code_partition(GraphSpec{0, 5});
  std::vector<std::vector<int>> groups;
  for (int p = 0; p < 8; ++p) groups.push_back({2 * p + 1, 2 * p + 2});
  Coloring f = merge_colors(cp.coloring, groups);
  must_verify(f, plus_diag(j_minus_e(8, 2), 1), "build_bc_coloring");
  return f;
}

// Four slot multiplicities for the diameter-10 Doob/Hamming composition:
// values in {0, 8} or a family size in {2..6}, summing to c.
std::array<int, 4> gamma_split(int c) {
  int x = c & 7;
  std::vector<int> parts;
  if (x == 1) {
    parts = {6, 3};
  } else if (x == 7) {
    parts = {4, 3};
  } else if (x != 0) {
    parts = {x};
  }
  int rem = c;
  for (int p : parts) rem -= p;
  if (rem < 0 || rem % 8 != 0 || parts.size() + static_cast<size_t>(rem / 8) > 4)
    throw std::logic_error("build_bc_coloring: no slot decomposition for c = " +
                           std::to_string(c));
  for (int i = 0; i < rem / 8; ++i) parts.push_back(8);
  std::array<int, 4> out{0, 0, 0, 0};
  for (size_t i = 0; i < parts.size(); ++i) out[i] = parts[i];
  return out;
}

BcColoring bc_diameter10(int b, int c, BcPreference pref) {
  GraphSpec base = (pref == BcPreference::PreferHamming) ? GraphSpec{0, 3} : GraphSpec{1, 0};
  std::array<int, 4> gam = gamma_split(c);
  std::vector<BcFamily> fams;
  for (int g : gam)
    if (g >= 2 && g <= 6) fams.push_back(bc_base_family(base, g));
  std::array<BcSlot, 4> slots;
  size_t fi = 0;
  for (size_t i = 0; i < 4; ++i) {
    if (gam[i] == 0) slots[i] = {BcSlot::ConstTwo, nullptr};
    else if (gam[i] == 8) slots[i] = {BcSlot::ConstOne, nullptr};
    else slots[i] = {BcSlot::Family, &fams[fi++]};
  }
  MultipartiteColoring h = multipartite(3, GraphSpec{0, 8});
  BcFamily fam = bc_family_compose(slots, h);
  if (fam.b != b || fam.c != c)
    throw std::logic_error("build_bc_coloring: composed family has wrong parameters");
  return finish_bc(fam.colorings[0], b, c,
                   "multipartite composition of base families over " + spec_str(base));
}

} // namespace

BcColoring build_bc_coloring(int b, int c, BcPreference pref) {
  if (b < 1 || c < 1) throw std::invalid_argument("build_bc_coloring: b,c >= 1 required");
  int sum = b + c;
  int g = std::gcd(b, c);
  if (b == c) return bc_equal(b);
  int q = sum / g;
  bool q_pow2 = std::popcount(static_cast<unsigned>(q)) == 1;
  int q_log = q_pow2 ? std::countr_zero(static_cast<unsigned>(q)) : 0;

  if (q_pow2 && q_log >= 2 && q_log % 2 == 0) {
    int l = q_log / 2; // q = 4^l
    int r = c / g;
    if (g == 1) {
      if (l > 2)
        throw DeskScaleExceeded("build_bc_coloring: would need a 1-perfect code partition at "
                                "diameter " + std::to_string((q - 1) / 3));
      return bc_code_union(b, c, l, pref);
    }
    if (l == 1) {
      GraphSpec spec = (pref == BcPreference::PreferDoob) ? GraphSpec{g / 2, g % 2}
                                                          : GraphSpec{0, g};
      MdsPartition mds = mds_partition(spec);
      return bc_scaled_merge(mds.coloring, r, b, c,
                             "merged MDS partition of " + spec_str(spec));
    }
    if (l == 2 && g == 2) {
      Coloring h16 = perfect_code_partition(GraphSpec{0, 5}).coloring;
      Coloring doubled = multiply_coloring(h16, 2, 0, 10);
      return bc_scaled_merge(std::move(doubled), r, b, c,
                             "merged doubled 1-perfect partition on H(10,4)");
    }
    throw DeskScaleExceeded("build_bc_coloring: the scaled (J-E) route for gcd " +
                            std::to_string(g) + " exceeds the exhaustive range");
  }

  if (q_pow2 && q_log >= 3 && q_log % 2 == 1) {
    int l = (q_log + 1) / 2; // q = 2^(2l-1)
    if (g >= 2) {
      if (l != 2)
        throw DeskScaleExceeded("build_bc_coloring: the stacked route for gcd " +
                                std::to_string(g) + " exceeds the exhaustive range");
      int r = c / g;
      if (g == 2)
        return bc_scaled_merge(paired_coset_coloring(), r, b, c,
                               "merged paired Hamming cosets on H(5,4)");
      if (g > 5)
        throw DeskScaleExceeded("build_bc_coloring: the stacked route for gcd " +
                                std::to_string(g) + " exceeds the exhaustive range");
      int y2 = (3 - g % 3) % 3;
      int k3 = (g - 2 * y2) / 3;
      Coloring acc;
      bool have = false;
      for (int i = 0; i < k3; ++i) {
        Coloring x = three_j_minus_e(GraphSpec{0, 7});
        acc = have ? sum_compose(acc, x) : std::move(x);
        have = true;
      }
      for (int i = 0; i < y2; ++i) {
        Coloring y = paired_coset_coloring();
        acc = have ? sum_compose(acc, y) : std::move(y);
        have = true;
      }
      return bc_scaled_merge(std::move(acc), r, b, c,
                             "merged stacked 3(J-E)/2(J-E)+E colorings (gcd " +
                                 std::to_string(g) + ")");
    }
    if (b == 1 || c == 1)
      throw NotAdmissible("build_bc_coloring: no perfect (" + std::to_string(b) + "," +
                          std::to_string(c) + ")-coloring exists");
    if (l == 2) {
      GraphSpec base = (pref == BcPreference::PreferHamming) ? GraphSpec{0, 3} : GraphSpec{1, 0};
      BcFamily fam = bc_base_family(base, c);
      return finish_bc(fam.colorings[0], b, c, "base family member on " + spec_str(base));
    }
    if (l == 3) return bc_diameter10(b, c, pref);
    throw DeskScaleExceeded("build_bc_coloring: coprime (b,c) with b+c = 2^" +
                            std::to_string(q_log) + " exceeds the exhaustive range");
  }

  throw NotAdmissible("build_bc_coloring: (" + std::to_string(b) + "," + std::to_string(c) +
                      ") does not match any admissible parameter family");
}

} // namespace doob
