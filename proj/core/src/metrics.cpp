#include "xsk/metrics.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xsk/period.hpp"

namespace xsk {

EscapeCurve escape_zeroland(const Params& prm) {
  if (prm.word_bits != 64)
    throw std::invalid_argument("escape scan runs on 64-bit-word shapes");
  constexpr size_t kTotal = 100000, kEvery = 100, kWin = 4;
  const unsigned n = prm.state_bits();
  // One slot per window position (window slides by one output): short
  // transients fall between coarser grid points and vanish from the stats.
  std::vector<double> acc(kTotal - (kWin - 1), 0.0);
  for (unsigned bit = 0; bit < n; bit++) {
    EngineState st = state_from_bit(prm.t, bit);
    Engine64 e(prm, st.words, st.p);
    unsigned ring[4] = {0, 0, 0, 0};
    unsigned window = 0;
    for (size_t k = 1; k <= kTotal; k++) {
      unsigned pc = static_cast<unsigned>(std::popcount(e.next()));
      window += pc - ring[k & 3];
      ring[k & 3] = pc;
      if (k >= kWin) acc[k - kWin] += window;
    }
  }
  EscapeCurve out;
  double sum = 0;
  for (double& a : acc) {
    a /= 256.0 * n;
    sum += a;
  }
  out.mean = sum / static_cast<double>(acc.size());
  double var = 0;
  for (double a : acc) var += (a - out.mean) * (a - out.mean);
  out.stddev = std::sqrt(var / static_cast<double>(acc.size()));
  out.ratio.resize(kTotal / kEvery);
  for (size_t m = 0; m < out.ratio.size(); m++)
    out.ratio[m] = acc[(m + 1) * kEvery - kWin];
  return out;
}

BitStream::BitStream(Engine64 eng, BitView view, unsigned bit)
    : eng_(std::move(eng)), view_(view), bit_(bit) {
  if (view == BitView::SingleBit && bit >= 64)
    throw std::invalid_argument("bit index out of range");
}

bool BitStream::next_bit() {
  if (!have_) {
    uint64_t o = eng_.next();
    switch (view_) {
      case BitView::AllBits: cur_ = o; have_ = 64; break;
      case BitView::SingleBit: cur_ = (o >> bit_) & 1; have_ = 1; break;
      case BitView::High32: cur_ = o >> 32; have_ = 32; break;
    }
  }
  bool b = cur_ & 1;
  cur_ >>= 1;
  have_--;
  return b;
}

uint64_t BitStream::next_word(unsigned nbits) {
  if (nbits == 64 && have_ == 0 && view_ == BitView::AllBits) return eng_.next();
  uint64_t w = 0;
  for (unsigned i = 0; i < nbits; i++)
    w |= static_cast<uint64_t>(next_bit()) << i;
  return w;
}

unsigned matrix_rank_64(std::array<uint64_t, 64>& rows) {
  unsigned rank = 0;
  for (unsigned col = 0; col < 64 && rank < 64; col++) {
    const uint64_t m = uint64_t(1) << col;
    unsigned piv = rank;
    while (piv < 64 && !(rows[piv] & m)) piv++;
    if (piv == 64) continue;
    std::swap(rows[piv], rows[rank]);
    for (unsigned i = rank + 1; i < 64; i++)
      if (rows[i] & m) rows[i] ^= rows[rank];
    rank++;
  }
  return rank;
}

std::array<double, 4> rank_law_64() {
  // P(rank = r) for iid uniform 64x64: 2^(-(64-r)^2) *
  //   prod_{i=0}^{r-1} (1-2^(i-64))^2 / (1-2^(i-r))
  std::array<double, 4> law{};
  double tail = 1.0;
  for (unsigned d = 0; d < 3; d++) { // d = 64 - r
    const unsigned r = 64 - d;
    double v = std::pow(2.0, -static_cast<double>(d) * d);
    for (unsigned i = 0; i < r; i++)
      v *= (1.0 - std::ldexp(1.0, static_cast<int>(i) - 64)) *
           (1.0 - std::ldexp(1.0, static_cast<int>(i) - 64)) /
           (1.0 - std::ldexp(1.0, static_cast<int>(i) - static_cast<int>(r)));
    law[d] = v;
    tail -= v;
  }
  law[3] = tail;
  return law;
}

double chi2_tail_3(double chi2) {
  // Q(3/2, s) with s = chi2/2: erfc(sqrt(s)) + 2 sqrt(s/pi) exp(-s)
  const double s = chi2 / 2.0;
  if (s <= 0) return 1.0;
  return std::erfc(std::sqrt(s)) +
         2.0 * std::sqrt(s / std::numbers::pi) * std::exp(-s);
}

RankProbe rank_probe(BitStream& bits, uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  RankProbe out;
  for (uint64_t tr = 0; tr < trials; tr++) {
    std::array<uint64_t, 64> rows;
    for (auto& r : rows) r = bits.next_word(64);
    unsigned rank = matrix_rank_64(rows);
    unsigned d = 64 - rank;
    out.counts[d > 3 ? 3 : d]++;
  }
  auto law = rank_law_64();
  out.chi2 = 0;
  for (unsigned k = 0; k < 4; k++) {
    out.expected[k] = law[k] * static_cast<double>(trials);
    double diff = static_cast<double>(out.counts[k]) - out.expected[k];
    out.chi2 += diff * diff / out.expected[k];
  }
  out.p = chi2_tail_3(out.chi2);
  return out;
}

size_t linear_complexity(BitStream& bits, size_t nbits) {
  BitSeq seq;
  for (size_t i = 0; i < nbits; i++) seq.push(bits.next_bit());
  return berlekamp_massey(seq).complexity;
}

namespace {

template <class W>
bool equidist_impl(const Params& prm, unsigned k) {
  const unsigned n = prm.state_bits();
  const unsigned kw = k * prm.word_bits;
  std::vector<W> seed(prm.t, 0);
  seed[0] = 1;
  Engine<W> e(prm, std::span<const W>(seed), 0);
  const uint64_t cycle = brute_force_period(prm);
  std::vector<uint32_t> counts(uint64_t(1) << kw, 0);
  // prime the first k-1 outputs of the window
  uint64_t window = 0;
  const uint64_t wmask = (kw == 64) ? ~uint64_t(0) : (uint64_t(1) << kw) - 1;
  for (unsigned i = 0; i + 1 < k; i++)
    window = (window >> prm.word_bits) |
             (static_cast<uint64_t>(e.next()) << ((k - 1) * prm.word_bits));
  for (uint64_t s = 0; s < cycle; s++) {
    window = ((window >> prm.word_bits) |
              (static_cast<uint64_t>(e.next()) << ((k - 1) * prm.word_bits))) &
             wmask;
    counts[window]++;
  }
  const uint32_t expect = (n == kw) ? 1 : (uint32_t(1) << (n - kw));
  if (counts[0] != expect - 1) return false;
  for (uint64_t v = 1; v < counts.size(); v++)
    if (counts[v] != expect) return false;
  return true;
}

template <class W>
bool bit_periods_impl(const Params& prm) {
  std::vector<W> seed(prm.t, 0);
  seed[0] = 1;
  const uint64_t cycle = brute_force_period(prm);
  Engine<W> e(prm, std::span<const W>(seed), 0);
  std::vector<W> outs(cycle);
  for (uint64_t s = 0; s < cycle; s++) outs[s] = e.next();
  // primes of the cycle length by trial division
  std::vector<uint64_t> qs;
  uint64_t m = cycle;
  for (uint64_t q = 2; q * q <= m; q++) {
    if (m % q) continue;
    qs.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) qs.push_back(m);
  for (unsigned bit = 0; bit < prm.word_bits; bit++) {
    for (uint64_t q : qs) {
      const uint64_t shift = cycle / q;
      bool same = true;
      for (uint64_t s = 0; s < cycle && same; s++) {
        uint64_t s2 = s + shift;
        if (s2 >= cycle) s2 -= cycle;
        same = (((outs[s] >> bit) & 1) == ((outs[s2] >> bit) & 1));
      }
      if (same) return false; // this bit repeats with a proper divisor period
    }
  }
  return true;
}

} // namespace

bool equidistributed_exactly(const Params& prm, unsigned tuple_words) {
  if (tuple_words == 0 || tuple_words > prm.t)
    throw std::invalid_argument("tuple_words must be in [1, t]");
  if (tuple_words * prm.word_bits > 24)
    throw std::invalid_argument("tuple space too large to count exhaustively");
  switch (prm.word_bits) {
    case 8: return equidist_impl<uint8_t>(prm, tuple_words);
    case 16: return equidist_impl<uint16_t>(prm, tuple_words);
    case 32: return equidist_impl<uint32_t>(prm, tuple_words);
    default: return equidist_impl<uint64_t>(prm, tuple_words);
  }
}

bool all_bit_periods_full(const Params& prm) {
  if (prm.state_bits() > 26)
    throw std::invalid_argument("state too wide to walk exhaustively");
  switch (prm.word_bits) {
    case 8: return bit_periods_impl<uint8_t>(prm);
    case 16: return bit_periods_impl<uint16_t>(prm);
    case 32: return bit_periods_impl<uint32_t>(prm);
    default: return bit_periods_impl<uint64_t>(prm);
  }
}

} // namespace xsk
