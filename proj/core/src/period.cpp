#include "xsk/period.hpp"

#include <numeric>
#include <stdexcept>

#include "xsk/engine.hpp"
#include "xsk/min_poly.hpp"

namespace xsk {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; q++) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

} // namespace

bool is_irreducible(const GF2Poly& p) {
  const int64_t deg = p.degree();
  if (deg < 1) return false;
  if (deg == 1) return true;
  if (!p.bit(0)) return false;          // divisible by x
  if (p.weight() % 2 == 0) return false; // divisible by x+1
  const auto n = static_cast<unsigned>(deg);
  ReduceCtx ctx(p);
  const GF2Poly x = GF2Poly::x();
  GF2Poly r = x;
  const auto qs = prime_divisors(n);
  for (unsigned i = 1; i <= n; i++) {
    r = ctx.sqrmod(r);
    for (unsigned q : qs)
      if (i == n / q && !GF2Poly::gcd(r ^ x, p).is_one()) return false;
  }
  return r == x; // x^(2^n) = x mod p
}

bool is_primitive(const GF2Poly& p, const FactorTable& table) {
  if (p.degree() != static_cast<int64_t>(table.n)) return false;
  if (!is_irreducible(p)) return false;
  if (table.n == 1) return p.bit(0); // only x+1 has a unit root
  ReduceCtx ctx(p);
  const mpz_class order = table.modulus();
  for (const auto& e : table.entries) {
    mpz_class exp = order / e.prime;
    if (ctx.powmod_x(exp).is_one()) return false;
  }
  return true;
}

std::vector<TripleRow> enumerate_scalar(const FactorTable& table, unsigned word_bits) {
  std::vector<TripleRow> rows;
  if (table.n != word_bits)
    throw std::invalid_argument("factor table width does not match word size");
  for (unsigned a = 1; a < word_bits; a++)
    for (unsigned b = 1; b < word_bits; b++)
      for (unsigned c = a; c < word_bits; c++) {
        Params prm = scalar_params(Variant::A0, a, b, c, word_bits);
        GF2Poly cand = char_poly_candidate(prm);
        if (cand.degree() != static_cast<int64_t>(word_bits)) continue;
        if (!is_primitive(cand, table)) continue;
        rows.push_back({a, b, c, static_cast<unsigned>(cand.weight())});
      }
  return rows;
}

std::vector<TripleRow> enumerate_block(unsigned t, const FactorTable& table,
                                       unsigned word_bits) {
  std::vector<TripleRow> rows;
  if (table.n != t * word_bits)
    throw std::invalid_argument("factor table width does not match t*word_bits");
  for (unsigned a = 1; a < word_bits; a++)
    for (unsigned b = 1; b < word_bits; b++) {
      if (a + b > word_bits || std::gcd(a, b) != 1) continue;
      for (unsigned c = 1; c < word_bits; c++) {
        Params prm = block_params(t, a, b, c, word_bits);
        GF2Poly cand = char_poly_candidate(prm);
        if (cand.degree() != static_cast<int64_t>(t) * word_bits) continue;
        if (!is_primitive(cand, table)) continue;
        rows.push_back({a, b, c, static_cast<unsigned>(cand.weight())});
      }
    }
  return rows;
}

namespace {

template <class W>
uint64_t brute_force_period_impl(const Params& prm) {
  std::vector<W> seed(prm.t, 0);
  seed[0] = 1;
  Engine<W> e(prm, std::span<const W>(seed), 0);
  uint64_t steps = 0;
  for (;;) {
    e.step();
    steps++;
    bool back = true;
    for (unsigned j = 0; j < prm.t && back; j++)
      back = (e.logical_word(j) == seed[j]);
    if (back) return steps;
  }
}

} // namespace

uint64_t brute_force_period(const Params& prm) {
  if (prm.state_bits() > 26)
    throw std::invalid_argument("state too wide to walk exhaustively");
  switch (prm.word_bits) {
    case 8: return brute_force_period_impl<uint8_t>(prm);
    case 16: return brute_force_period_impl<uint16_t>(prm);
    case 32: return brute_force_period_impl<uint32_t>(prm);
    default: return brute_force_period_impl<uint64_t>(prm);
  }
}

} // namespace xsk
