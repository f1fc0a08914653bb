// Deterministic builders for perfect colorings, completely regular codes and
// multifold 1-perfect codes in Doob and quaternary Hamming graphs, plus a
// small recipe engine for composing them. Every materialized output is
// verified against its declared quotient matrix before being returned; a
// verification failure is an internal error (std::logic_error), never a
// silently wrong result.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "doob/eqpart.hpp"

namespace doob {

struct UnsupportedSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAdmissible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BlockStructureMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConditionViolated : std::runtime_error {
  int item;
  ConditionViolated(int it, const std::string& msg)
      : std::runtime_error(msg), item(it) {}
};

// ---- Cartesian product plumbing -------------------------------------------
// The product D(m1,n1) x D(m2,n2) is D(m1+m2, n1+n2) with the first factor's
// coordinates preceding the second's inside each block.
GraphSpec product_spec(const GraphSpec& a, const GraphSpec& b);
uint64_t product_index(const GraphSpec& a, const GraphSpec& b, uint64_t x, uint64_t y);
std::pair<uint64_t, uint64_t> product_split(const GraphSpec& a, const GraphSpec& b, uint64_t w);

// ---- Base builders --------------------------------------------------------

// Copies colors from the projection onto the original first coordinates;
// quotient S + (6m'+3n')E.
Coloring extend(const Coloring& g, int mp, int np);

// GF(4) Hamming code of length (4^l-1)/3 under the fixed Z4<->GF(4)
// relabeling; additive, 1-perfect.
Code hamming_one_perfect(int l);

struct CodePartition {
  GraphSpec spec;
  std::vector<Code> codes; // pairwise disjoint 1-perfect codes covering V
  Coloring coloring;       // induced coloring, quotient (J-E)
};
// Partition into 4^l disjoint 1-perfect codes; diameters 1 and 5 supported.
CodePartition perfect_code_partition(const GraphSpec& spec);

struct MdsPartition {
  std::vector<Code> codes; // 4 disjoint 2-MDS codes
  Coloring coloring;       // quotient (2m+n)(J-E)
};
// Color of x = sum of Shrikhande labels + sum of K4 values in GF(4).
MdsPartition mds_partition(const GraphSpec& spec);

struct D40Partition {
  Code code;                  // C^a = {x in D(4,0) : sum of coordinates = a}
  std::array<Code, 4> parts;  // partition of C^a, each with distance >= 3
};
D40Partition d40_partition(int a); // a = packed Z4^2 digit

struct Mds3Partition {
  int k = 0;
  GraphSpec spec;          // H(2^k,4) (only indexable when 2^k <= 15)
  std::vector<Code> codes; // materialized when 2^k <= 12, else empty
  // Part index 1..2^k for words inside the union, 0 outside. The word is a
  // length-2^k vector of Z4 symbols, so this works beyond the index range.
  std::function<int(const std::vector<int>&)> part_of;
};
// 2-MDS code of H(2^k,4) partitioned into 2^k codes with distance >= 3,
// realized as syndrome classes over GF(2^k) restricted to the Q-subcube.
Mds3Partition mds_distance3_partition(int k);

struct MultipartiteColoring {
  Coloring coloring; // 4*2^k colors, color (i,j) |-> i*2^k + j + 1
  int k = 0;

  int pow2() const { return 1 << k; }
  int part(int color) const { return (color - 1) >> k; }
  int slice(int color) const { return (color - 1) & (pow2() - 1); }
  int color_of(int i, int j) const { return (i << k) + j + 1; }
  // The defining quotient: one neighbour of every (r,s) with r != part, none
  // with r = part.
  QuotientMatrix quotient() const;
};
// k-multipartite perfect coloring of D(m,n) with 2m+n = 2^k. Supported:
// k = 2 (all three diameter-4 specs), k = 3 with m = 0.
MultipartiteColoring multipartite(int k, const GraphSpec& spec);

// Quotient of g must decompose into cyclic (circulant) diagonal blocks and
// constant off-diagonal blocks; each h_i lives on a common second factor with
// a circulant quotient of matching block size. f(x,y) = (i, h_i(y)+j mod k_i).
Coloring diag_product(const Coloring& g, const std::vector<int>& block_sizes,
                      const std::vector<Coloring>& h_list);

// One-block special case: f(x,y) = g(x)+h(y) mod k. Both quotients must be
// circulant; the result's quotient is the circulant sum.
Coloring sum_compose(const Coloring& g, const Coloring& h);

// Perfect coloring with quotient kS on D(mk+m',n') where 2m'+n' = kn
// (n' >= n required when k is odd).
Coloring multiply_coloring(const Coloring& g, int k, int mp, int np);

// Perfect 4k-coloring on D(4m+c, 4n-2c), c in {0..2n}; quotient blocks
// s_ij * J_{4x4}.
Coloring split_coloring(const Coloring& g, int c);

// 2^k-coloring with quotient 3J (2m+n = 2^k; k=2, k=3, and m=0 powers that
// stay within the exhaustive range).
Coloring three_j(const GraphSpec& spec);
// 2^k-coloring with quotient 3(J-E) (2m+n = 2^k - 1; m>0 requires k != 3).
Coloring three_j_minus_e(const GraphSpec& spec);

// (2^k+1)-coloring for 2m+n = gamma*2^k (k >= 2; m>0 requires k != 3):
// rows 1..2^k are (0,...,0, 6m+3n), last row (gamma,...,gamma, 4m+2n).
// k selects the decomposition when several powers of two divide 2m+n.
Coloring gamma_mds_coloring(const GraphSpec& spec, int k);
QuotientMatrix gamma_mds_quotient(const GraphSpec& spec, int k, int gamma);

// Word-level form of the m = 0 construction for graphs beyond the exhaustive
// range: colors computed from the two GF(2^k) syndromes.
struct GammaMdsSyndrome {
  GraphSpec spec; // H(gamma*2^k, 4)
  int k = 0, gamma = 0;
  QuotientMatrix quotient;
  std::function<int(const std::vector<int>&)> color_of; // 1..2^k+1
};
GammaMdsSyndrome gamma_mds_syndrome(int gamma, int k);

// Completely regular code of covering radius 2 (union of the first b classes
// of the gamma-MDS coloring); implicit word-level representation, m = 0.
struct Rad2Code {
  GraphSpec spec;
  int k = 0, gamma = 0, b = 0, c = 0; // c = gamma*b
  QuotientMatrix quotient;            // 3x3 tridiagonal distance quotient
  std::function<bool(const std::vector<int>&)> in_code;
  std::function<int(const std::vector<int>&)> distance_class; // 0,1,2
};
Rad2Code rad2_code(const GraphSpec& spec, int b);

struct Rad2Report {
  bool ok = true;
  std::string detail; // first violation, if any
};
// One representative per syndrome class (exhaustive by translation
// invariance) plus extra random spot checks.
Rad2Report rad2_verify(const Rad2Code& rc, int random_samples, uint64_t seed);

// ---- (b,c) machinery ------------------------------------------------------

struct BcFamily {
  GraphSpec spec;
  int b = 0, c = 0;       // every member is a perfect (b,c)-coloring
  int coverage = 0;       // every vertex has color 1 in this many members
  std::vector<Coloring> colorings;
};
// Families of 2^k perfect (2^k - c, c)-colorings with coverage c on the two
// base graphs D(1,0) (2^k = 8) and H(3,4) (2^k = 8), c in {2..6}; found by
// search + exact cover and fully verified.
BcFamily bc_base_family(const GraphSpec& spec, int c);

struct BcSlot {
  enum Kind { Family, ConstOne, ConstTwo } kind = ConstTwo;
  const BcFamily* family = nullptr;
};
// Composition of four base slots with a k-multipartite coloring h: produces
// 2^(k+2) perfect (2^(k+2)-sum, sum)-colorings on the product with coverage
// sum, where sum adds c_i for family slots and 2^k for constant-one slots.
BcFamily bc_family_compose(const std::array<BcSlot, 4>& slots,
                           const MultipartiteColoring& h);

struct BcColoring {
  GraphSpec spec;
  Coloring coloring;
  QuotientMatrix quotient;
  std::string method; // human-readable construction route
};
enum class BcPreference { Auto, PreferDoob, PreferHamming };
// A perfect (b,c)-coloring at the smallest spec our construction routes
// reach, fully verified. Throws NotAdmissible or DeskScaleExceeded (the
// message names the spec that would be required).
BcColoring build_bc_coloring(int b, int c, BcPreference pref = BcPreference::Auto);

// ---- Tilings and multifold codes ------------------------------------------

struct TilingResult {
  GraphSpec spec;
  std::vector<Coloring> colorings; // 2^l two-colorings on the product
  QuotientMatrix quotient;
  int coverage = 0; // measured: color-1 count per vertex across the family
};
// g: 2^l-coloring with quotient k(J-E)+aE; family: 2^l two-colorings with a
// common quotient and constant coverage. f^i(x,y) = f_{g(x)+i-1}(y).
TilingResult tiling_compose(const Coloring& g, const std::vector<Coloring>& family);

struct MultifoldPartition {
  GraphSpec spec;
  int alpha = 0, k = 0;    // 6m+3n+1 = alpha * 2^k
  std::vector<Code> codes; // 2^k disjoint alpha-fold 1-perfect codes
};
// Diameters 1, 5 and 9 (2m+n = 1 mod 4); larger diameters exceed the
// exhaustive verification range and throw DeskScaleExceeded.
MultifoldPartition multifold_partition(const GraphSpec& spec);

// ---- Recipe engine --------------------------------------------------------

struct RecipeResult {
  Coloring coloring;
  QuotientMatrix quotient; // verified
  std::string summary;
};
// One node per line, two-space indentation for children:
//   leaf nodes     mds m n | codepart m n | threej m n | threejme m n |
//                  gammamds m n k | bc b c
//   interior nodes extend dm dn | multiply k m' n' | split c |
//                  merge a,b c,d ... | sum | diag k1 k2 ... | tiling
RecipeResult eval_recipe_text(const std::string& text);
RecipeResult eval_recipe_file(const std::string& path);

} // namespace doob
