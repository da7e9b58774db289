#include "xsk/min_poly.hpp"

#include <bit>
#include <cstring>
#include <functional>

#include "xsk/engine.hpp"

namespace xsk {

BMResult berlekamp_massey(const BitSeq& seq) {
  const size_t N = seq.n;
  const size_t nw = N / 64 + 2;
  std::vector<uint64_t> C(nw, 0), B(nw, 0), R(nw, 0), T;
  C[0] = 1;
  B[0] = 1;
  size_t L = 0, m = 1;
  for (size_t k = 0; k < N; k++) {
    // R holds the window reversed: bit j of R is s_{k-j}
    for (size_t j = nw - 1; j > 0; j--) R[j] = (R[j] << 1) | (R[j - 1] >> 63);
    R[0] = (R[0] << 1) | static_cast<uint64_t>(seq.bit(k));
    uint64_t acc = 0;
    for (size_t j = 0; j <= L / 64; j++) acc ^= C[j] & R[j];
    if (std::popcount(acc) & 1) {
      if (2 * L <= k) {
        T = C;
        const size_t wk = m / 64, bk = m % 64;
        for (size_t j = nw; j-- > wk;) {
          uint64_t v = B[j - wk] << bk;
          if (bk && j > wk) v |= B[j - wk - 1] >> (64 - bk);
          C[j] ^= v;
        }
        B = std::move(T);
        L = k + 1 - L;
        m = 1;
      } else {
        const size_t wk = m / 64, bk = m % 64;
        for (size_t j = nw; j-- > wk;) {
          uint64_t v = B[j - wk] << bk;
          if (bk && j > wk) v |= B[j - wk - 1] >> (64 - bk);
          C[j] ^= v;
        }
        m++;
      }
    } else {
      m++;
    }
  }
  GF2Poly conn = GF2Poly::from_words(std::move(C));
  // C(0) = 1 and deg C <= L, so the reversal is monic of degree exactly L.
  return {conn.reversed(L), L};
}

namespace {

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class W>
std::vector<W> draw_words(uint64_t& rng, unsigned t) {
  std::vector<W> v(t);
  bool nz = false;
  for (auto& w : v) {
    w = static_cast<W>(splitmix(rng));
    nz |= (w != 0);
  }
  if (!nz) v[0] = 1;
  return v;
}

template <class W>
BitSeq engine_parity_seq(const Params& prm, const std::vector<W>& u,
                         const std::vector<W>& v, size_t terms) {
  Engine<W> e(prm, std::span<const W>(u), 0);
  BitSeq seq;
  for (size_t k = 0; k < terms; k++) {
    unsigned par = 0;
    for (unsigned j = 0; j < prm.t; j++)
      par ^= static_cast<unsigned>(std::popcount(
          static_cast<uint64_t>(e.logical_word(j) & v[j])));
    seq.push(par & 1);
    e.step();
  }
  return seq;
}

// Shared LCM-until-stable loop; seq_for(u64 words u, v) supplies one parity run.
MinPolyResult lcm_protocol(
    unsigned state_bits,
    const std::function<BitSeq(uint64_t& rng)>& seq_for) {
  uint64_t rng = 0x243f6a8885a308d3ULL;
  MinPolyResult res;
  res.state_bits = state_bits;
  unsigned stable = 0;
  for (unsigned pair = 0; pair < 24; pair++) {
    BitSeq seq = seq_for(rng);
    BMResult bm = berlekamp_massey(seq);
    res.pairs = pair + 1;
    GF2Poly next = res.poly.is_zero() ? bm.min_poly
                                      : GF2Poly::lcm(res.poly, bm.min_poly);
    if (next.degree() == static_cast<int64_t>(state_bits)) {
      res.poly = std::move(next);
      break;
    }
    stable = (next == res.poly) ? stable + 1 : 0;
    res.poly = std::move(next);
    if (stable >= 2 && res.pairs >= 3) break;
  }
  return res;
}

template <class W>
MinPolyResult min_poly_impl(const Params& prm) {
  const unsigned n = prm.state_bits();
  return lcm_protocol(n, [&](uint64_t& rng) {
    auto u = draw_words<W>(rng, prm.t);
    auto v = draw_words<W>(rng, prm.t);
    return engine_parity_seq<W>(prm, u, v, 2 * static_cast<size_t>(n));
  });
}

} // namespace

MinPolyResult min_poly(const Params& prm) {
  switch (prm.word_bits) {
    case 8: return min_poly_impl<uint8_t>(prm);
    case 16: return min_poly_impl<uint16_t>(prm);
    case 32: return min_poly_impl<uint32_t>(prm);
    default: return min_poly_impl<uint64_t>(prm);
  }
}

MinPolyResult min_poly(const BitMatrix& m) {
  const auto n = static_cast<unsigned>(m.dim());
  const size_t wpr = m.words_per_row();
  return lcm_protocol(n, [&](uint64_t& rng) {
    std::vector<uint64_t> u(wpr, 0), v(wpr, 0);
    bool nz = false;
    for (size_t j = 0; j < wpr; j++) {
      uint64_t mask = (j + 1 == wpr && n % 64) ? (uint64_t(1) << (n % 64)) - 1
                                               : ~uint64_t(0);
      u[j] = splitmix(rng) & mask;
      v[j] = splitmix(rng) & mask;
      nz |= (u[j] != 0);
    }
    if (!nz) u[0] = 1;
    bool vz = true;
    for (uint64_t w : v) vz &= (w == 0);
    if (vz) v[0] = 1;
    BitSeq seq;
    std::vector<uint64_t> r = u;
    for (size_t k = 0; k < 2 * static_cast<size_t>(n); k++) {
      uint64_t acc = 0;
      for (size_t j = 0; j < wpr; j++) acc ^= r[j] & v[j];
      seq.push(std::popcount(acc) & 1);
      r = m.apply(r);
    }
    return seq;
  });
}

namespace {

template <class W>
GF2Poly char_poly_candidate_impl(const Params& prm) {
  uint64_t rng = 0x452821e638d01377ULL;
  auto u = draw_words<W>(rng, prm.t);
  auto v = draw_words<W>(rng, prm.t);
  const size_t terms = 2 * static_cast<size_t>(prm.state_bits());
  return berlekamp_massey(engine_parity_seq<W>(prm, u, v, terms)).min_poly;
}

} // namespace

GF2Poly char_poly_candidate(const Params& prm) {
  switch (prm.word_bits) {
    case 8: return char_poly_candidate_impl<uint8_t>(prm);
    case 16: return char_poly_candidate_impl<uint16_t>(prm);
    case 32: return char_poly_candidate_impl<uint32_t>(prm);
    default: return char_poly_candidate_impl<uint64_t>(prm);
  }
}

} // namespace xsk
