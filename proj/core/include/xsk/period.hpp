#ifndef XSK_PERIOD_HPP
#define XSK_PERIOD_HPP

#include <cstdint>
#include <vector>

#include "xsk/factor_table.hpp"
#include "xsk/gf2_poly.hpp"
#include "xsk/params.hpp"

namespace xsk {

bool is_irreducible(const GF2Poly& p);

// Primitive of degree table.n: irreducible, and x generates the full
// multiplicative group, checked via the complete factorization of 2^n - 1.
// A transition whose characteristic polynomial is primitive visits every
// nonzero state before returning, i.e. has period 2^n - 1.
bool is_primitive(const GF2Poly& p, const FactorTable& table);

struct TripleRow {
  unsigned a = 0, b = 0, c = 0;
  unsigned weight = 0; // nonzero coefficients of the characteristic polynomial
  auto operator<=>(const TripleRow&) const = default;
};

// Every full-period shift triple of the single-word engine at the table's
// width. The reversal symmetry pairs (a,b,c) with (c,b,a), so only the
// canonical representative a <= c is listed. Lexicographic by (a,b,c).
std::vector<TripleRow> enumerate_scalar(const FactorTable& table, unsigned word_bits = 64);

// Every full-period triple of the t-word block engine: a+b <= word_bits and
// gcd(a,b) = 1 keep the search well-shaped; c ranges freely. Lexicographic.
std::vector<TripleRow> enumerate_block(unsigned t, const FactorTable& table,
                                       unsigned word_bits = 64);

// Steps until the logical state (word array read from the rotation index)
// first returns to its start, from the word0=1 seed. Scaled shapes only;
// throws if state_bits > 26.
uint64_t brute_force_period(const Params& prm);

} // namespace xsk

#endif
