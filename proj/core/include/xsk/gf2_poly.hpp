#ifndef XSK_GF2_POLY_HPP
#define XSK_GF2_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace xsk {

// Dense polynomial over GF(2). Bit i of word j is the coefficient of
// x^(64j+i). Invariant: highest stored word is nonzero (zero poly is empty).
class GF2Poly {
 public:
  GF2Poly() = default;
  static GF2Poly zero() { return {}; }
  static GF2Poly one() { return monomial(0); }
  static GF2Poly x() { return monomial(1); }
  static GF2Poly monomial(size_t e);
  static GF2Poly from_words(std::vector<uint64_t> w); // trims trailing zeros

  int64_t degree() const; // -1 stands in for deg(0) = -infinity
  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  bool bit(size_t e) const;
  void set_bit(size_t e);
  size_t weight() const;

  const std::vector<uint64_t>& words() const { return w_; }
  // words()[0..k-1], zero-padded; used to pack masks of a fixed width.
  std::vector<uint64_t> padded_words(size_t k) const;

  GF2Poly& operator^=(const GF2Poly& o);
  friend GF2Poly operator^(GF2Poly a, const GF2Poly& b) { a ^= b; return a; }
  bool operator==(const GF2Poly&) const = default;

  GF2Poly shifted_left(size_t k) const;  // * x^k
  GF2Poly shifted_right(size_t k) const; // div x^k
  void truncate(size_t bits);            // mod x^bits
  GF2Poly reversed(size_t n) const;      // x^n * p(1/x); needs degree <= n

  static GF2Poly mul(const GF2Poly& a, const GF2Poly& b);
  static GF2Poly square(const GF2Poly& a);
  static void divmod(const GF2Poly& num, const GF2Poly& den, GF2Poly& q, GF2Poly& r);
  static GF2Poly mod(const GF2Poly& num, const GF2Poly& den);
  static GF2Poly gcd(GF2Poly a, GF2Poly b);
  static GF2Poly lcm(const GF2Poly& a, const GF2Poly& b);

  // "x^64 + x^13 + 1" (descending powers); "0" for the zero polynomial.
  std::string to_sparse_string() const;
  // Space-separated 16-digit hex words, lowest word first.
  std::string to_hex_words() const;
  // Accepts either of the two forms above.
  static GF2Poly parse(const std::string& text);

 private:
  void trim();
  std::vector<uint64_t> w_;
};

namespace detail {
// Carryless 64x64 -> 128 multiply; the portable one exists so the
// hardware path can be cross-checked and non-x86 builds still work.
void clmul64(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi);
void clmul64_portable(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi);
} // namespace detail

// Precomputed Barrett context for reduction mod a fixed P of degree n >= 1:
// with mu = x^(2n) div P, the quotient of any f with deg f <= 2n-1 is
// ((f div x^n) * mu) div x^n, exactly. Two multiplies per reduction.
class ReduceCtx {
 public:
  explicit ReduceCtx(GF2Poly P);

  const GF2Poly& modulus() const { return P_; }
  size_t n() const { return n_; }

  GF2Poly reduce(const GF2Poly& f) const;
  GF2Poly mulmod(const GF2Poly& a, const GF2Poly& b) const;
  GF2Poly sqrmod(const GF2Poly& a) const;
  GF2Poly mulx(GF2Poly f) const; // f*x mod P, one shift + conditional xor
  GF2Poly powmod(const GF2Poly& base, const mpz_class& e) const;
  GF2Poly powmod_x(const mpz_class& e) const;

 private:
  GF2Poly P_, mu_;
  size_t n_ = 0;
};

} // namespace xsk

#endif
