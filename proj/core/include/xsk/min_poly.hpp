#ifndef XSK_MIN_POLY_HPP
#define XSK_MIN_POLY_HPP

#include <cstdint>
#include <vector>

#include "xsk/bit_matrix.hpp"
#include "xsk/gf2_poly.hpp"
#include "xsk/params.hpp"

namespace xsk {

// Bit run packed 64 per word, bit k of the run at word k/64, position k%64.
struct BitSeq {
  std::vector<uint64_t> words;
  size_t n = 0;
  void push(bool b) {
    if (n % 64 == 0) words.push_back(0);
    if (b) words.back() |= uint64_t(1) << (n % 64);
    n++;
  }
  bool bit(size_t k) const { return (words[k / 64] >> (k % 64)) & 1; }
};

struct BMResult {
  GF2Poly min_poly;  // monic minimal polynomial of the recurrence
  size_t complexity; // shortest LFSR length L
};

// Berlekamp-Massey over GF(2). Given 2d terms of a sequence whose minimal
// polynomial has degree <= d, the recovered polynomial is exact.
BMResult berlekamp_massey(const BitSeq& seq);

struct MinPolyResult {
  GF2Poly poly;
  unsigned state_bits = 0;
  unsigned pairs = 0; // observation pairs consumed
  bool full_degree() const { return poly.degree() == static_cast<int64_t>(state_bits); }
};

// Minimal polynomial of the state transition: LCM over deterministic
// nonzero (start state u, mask v) pairs of the minimal polynomial of the
// parity sequence <state_k, v>, iterated until the LCM stops growing
// (at least 3 pairs) or reaches full degree, which ends the search since
// it cannot grow further. A result below full degree is reported as-is;
// callers decide whether that is acceptable.
MinPolyResult min_poly(const Params& prm);
MinPolyResult min_poly(const BitMatrix& m);

// Single-pair shortcut used by bulk parameter screening: when the true
// minimal polynomial is irreducible of full degree, any nonzero pair
// recovers it exactly, so full-period candidates are never missed and a
// degree check on this one polynomial is a sound filter.
GF2Poly char_poly_candidate(const Params& prm);

} // namespace xsk

#endif
