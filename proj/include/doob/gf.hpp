// Arithmetic in GF(2^k), k <= 16, with fixed primitive moduli, plus the
// label maps used throughout the construction code.
//
// Conventions fixed for reproducibility of all emitted objects:
//   * modulus for k=2 is x^2+x+1, k=3 is x^3+x+1, k=4 is x^4+x+1 (full
//     table below); alpha = residue of x is primitive for every k.
//   * Q = {0,1,x,x+1} (polynomials of degree < 2) with the bijection to Z4
//     0<->0, 1<->1, x<->2, x+1<->3.
//   * the global Z4 <-> GF(4) bijection is 0<->0, 1<->1, 2<->alpha,
//     3<->alpha^2.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace doob {

namespace gf_detail {
// Primitive polynomials over GF(2), bit i = coefficient of x^i.
// Index by k; entry includes the leading x^k term.
inline constexpr std::array<uint32_t, 17> kModulus = {
    0,        // k=0 unused
    0b11,     // x+1 (GF(2))
    0b111,    // x^2+x+1
    0b1011,   // x^3+x+1
    0b10011,  // x^4+x+1
    0b100101, // x^5+x^2+1
    0b1000011,          // x^6+x+1
    0b10001001,         // x^7+x^3+1
    0b100011101,        // x^8+x^4+x^3+x^2+1
    0b1000010001,       // x^9+x^4+1
    0b10000001001,      // x^10+x^3+1
    0b100000000101,     // x^11+x^2+1
    0b1000001010011,    // x^12+x^6+x^4+x+1
    0b10000000011011,   // x^13+x^4+x^3+x+1
    0b100010001000011,  // x^14+x^10+x^6+x+1
    0b1000000000000011, // x^15+x+1
    0b10001000000001011 // x^16+x^12+x^3+x+1
};
} // namespace gf_detail

struct FieldElem {
  uint8_t k = 2;      // extension degree
  uint16_t bits = 0;  // coefficients over GF(2), degree < k

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

class Field {
public:
  explicit Field(int k) : k_(k) {
    if (k < 1 || k > 16) throw std::invalid_argument("GF(2^k): k must be in [1,16]");
  }

  int degree() const { return k_; }
  uint32_t order() const { return 1u << k_; }
  uint32_t modulus() const { return gf_detail::kModulus[static_cast<size_t>(k_)]; }

  FieldElem zero() const { return {static_cast<uint8_t>(k_), 0}; }
  FieldElem one() const { return {static_cast<uint8_t>(k_), 1}; }
  FieldElem alpha() const {
    if (k_ == 1) return one();
    return {static_cast<uint8_t>(k_), 2};
  }
  FieldElem elem(uint32_t bits) const {
    if (bits >= order()) throw std::out_of_range("field element out of range");
    return {static_cast<uint8_t>(k_), static_cast<uint16_t>(bits)};
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    check(a); check(b);
    return {a.k, static_cast<uint16_t>(a.bits ^ b.bits)};
  }

  FieldElem mul(FieldElem a, FieldElem b) const {
    check(a); check(b);
    uint32_t x = a.bits, y = b.bits, acc = 0;
    while (y) {
      if (y & 1) acc ^= x;
      y >>= 1;
      x <<= 1;
      if (x & order()) x ^= modulus();
    }
    return {a.k, static_cast<uint16_t>(acc)};
  }

  FieldElem pow(FieldElem a, uint64_t e) const {
    check(a);
    FieldElem r = one(), base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // Powers of alpha in the fixed indexing order 0, 1, alpha, alpha^2, ...:
  // position i of a check-matrix row holds label(i) below.
  // label(0) = 0, label(i) = alpha^(i-1) for i >= 1.
  FieldElem position_label(uint32_t i) const {
    if (i == 0) return zero();
    return pow(alpha(), i - 1);
  }

private:
  void check(FieldElem a) const {
    if (a.k != k_) throw std::invalid_argument("field element degree mismatch");
  }
  int k_;
};

// Q = {0,1,x,x+1} inside GF(2^k); the bit pattern of the Z4 value IS the
// polynomial: 0<->00, 1<->01, 2<->10 (x), 3<->11 (x+1).
inline FieldElem q_of_z4(const Field& f, int v) {
  if (v < 0 || v > 3) throw std::out_of_range("Z4 value");
  return f.elem(static_cast<uint32_t>(v));
}
inline int z4_of_q(FieldElem e) {
  if (e.bits > 3) throw std::out_of_range("element not in Q");
  return e.bits;
}

// GF(4) elements as small ints 0,1,2,3 meaning 0,1,alpha,alpha^2 under the
// k=2 modulus x^2+x+1 (alpha=x=bits 10, alpha^2=x+1=bits 11). This "log-ish"
// encoding is what the Z4<->GF(4) bijection uses.
inline int gf4_bits_of_code(int c) {
  static constexpr int tbl[4] = {0, 1, 2, 3}; // 0,1,x,x+1
  return tbl[c & 3];
}
inline int gf4_code_of_bits(int b) {
  static constexpr int tbl[4] = {0, 1, 2, 3};
  return tbl[b & 3];
}

// Addition of GF(4) in the 0,1,alpha,alpha^2 coding. With the fixed modulus
// the bit patterns are 00,01,10,11 in that same order, so addition is XOR.
inline int gf4_add(int a, int b) { return a ^ b; }
inline int gf4_mul(int a, int b) {
  // multiplication table in the 0,1,alpha,alpha^2=:3 coding
  static constexpr int tbl[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return tbl[a & 3][b & 3];
}

// Global bijection Z4 <-> GF(4): 0<->0, 1<->1, 2<->alpha, 3<->alpha^2.
// In the coding above this is the identity on {0,1,2,3}.
inline int gf4_of_z4(int v) { return v & 3; }
inline int z4_of_gf4(int g) { return g & 3; }

// Label of a Shrikhande-coordinate value (a,b) in Z4^2:
// label(a,b) = (a mod 2)*alpha + (b mod 2), a homomorphism Z4^2 -> (GF(4),+).
// Preimages: label 0 = {00,02,20,22}, 1 = {01,03,21,23},
//            alpha = {10,12,30,32}, alpha^2 = {11,13,31,33}.
inline int shrikhande_label(int a, int b) {
  int hi = a & 1, lo = b & 1;
  // (hi*alpha + lo) in the 0,1,alpha,alpha^2 coding: bits hi,lo give
  // 00->0, 01->1, 10->alpha, 11->alpha+1=alpha^2.
  return (hi << 1) | lo;
}
// Same, on a packed Z4^2 digit d = 4a+b.
inline int shrikhande_label_packed(int d) {
  return shrikhande_label((d >> 2) & 3, d & 3);
}

// True iff label(a+b) = label(a)+label(b) for all 256 pairs in Z4^2.
bool label_additivity_check();

} // namespace doob
