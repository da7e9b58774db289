#include <doctest.h>

#include <cmath>
#include <vector>

#include "xsk/metrics.hpp"
#include "xsk/seed_schedule.hpp"

using namespace xsk;

namespace {

Params x64star() { return scalar_params(Variant::A1, 12, 25, 27, 64, kMult64); }
Params x64raw() { return scalar_params(Variant::A1, 12, 25, 27); }

BitStream stream(const Params& prm, BitView view, unsigned bit = 0) {
  return BitStream(make_engine(prm, schedule_seed(prm.state_bits(), 0)), view, bit);
}

} // namespace

TEST_CASE("bit views slice the output stream") {
  Engine64 twin = make_engine(x64star(), schedule_seed(64, 0));

  BitStream all = stream(x64star(), BitView::AllBits);
  for (int w = 0; w < 4; w++) {
    uint64_t o = twin.next();
    for (unsigned i = 0; i < 64; i++) CHECK(all.next_bit() == (((o >> i) & 1) != 0));
  }
  // aligned 64-bit reads take the word path and stay in sync
  uint64_t direct = all.next_word(64);
  CHECK(direct == twin.next());

  Engine64 twin2 = make_engine(x64star(), schedule_seed(64, 0));
  BitStream high = stream(x64star(), BitView::High32);
  BitStream fifth = stream(x64star(), BitView::SingleBit, 5);
  for (int w = 0; w < 4; w++) {
    uint64_t o = twin2.next();
    for (unsigned i = 0; i < 32; i++) CHECK(high.next_bit() == (((o >> (32 + i)) & 1) != 0));
    CHECK(fifth.next_bit() == (((o >> 5) & 1) != 0));
  }
  CHECK_THROWS(BitStream(make_engine(x64star(), schedule_seed(64, 0)),
                         BitView::SingleBit, 64));
}

TEST_CASE("rank of packed 64x64 matrices") {
  std::array<uint64_t, 64> rows{};
  for (unsigned i = 0; i < 64; i++) rows[i] = uint64_t(1) << i;
  CHECK(matrix_rank_64(rows) == 64);

  rows.fill(0);
  CHECK(matrix_rank_64(rows) == 0);

  for (unsigned i = 0; i < 64; i++) rows[i] = uint64_t(1) << i;
  rows[7] = rows[9] = 0x123456789abcdef0ULL; // one dependent pair
  CHECK(matrix_rank_64(rows) == 63);
}

TEST_CASE("rank distribution of iid matrices") {
  auto law = rank_law_64();
  CHECK(law[0] == doctest::Approx(0.288788095087).epsilon(1e-9));
  CHECK(law[1] == doctest::Approx(0.577576190173).epsilon(1e-9));
  CHECK(law[2] == doctest::Approx(0.128350264483).epsilon(1e-9));
  CHECK(law[3] == doctest::Approx(0.005285450257).epsilon(1e-7));
  CHECK(law[0] + law[1] + law[2] + law[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chi-square upper tail, three degrees of freedom") {
  CHECK(chi2_tail_3(0.5) == doctest::Approx(0.918891411654676).epsilon(1e-10));
  CHECK(chi2_tail_3(1.0) == doctest::Approx(0.801251956901201).epsilon(1e-10));
  CHECK(chi2_tail_3(7.815) == doctest::Approx(0.0499939029748839).epsilon(1e-10));
  CHECK(chi2_tail_3(16.266) == doctest::Approx(0.00100011160466212).epsilon(1e-10));
  CHECK(chi2_tail_3(30.0) == doctest::Approx(1.38005703129326e-06).epsilon(1e-9));
  CHECK(chi2_tail_3(0.0) == 1.0);
  CHECK(chi2_tail_3(200.0) < 1e-40);
}

TEST_CASE("rank probe flags raw linear output and passes scrambled halves") {
  // every 64 consecutive raw outputs are related by a fixed linear map,
  // so the rank distribution degenerates
  BitStream raw = stream(x64raw(), BitView::AllBits);
  RankProbe bad = rank_probe(raw, 50);
  CHECK(bad.p < 1e-12);
  CHECK(bad.counts[0] + bad.counts[1] + bad.counts[2] + bad.counts[3] == 50);

  // the upper half of the scrambled 16-word generator behaves like noise
  BitStream good = stream(block_params(16, 31, 11, 30, 64, kMult1024), BitView::High32);
  RankProbe ok = rank_probe(good, 200);
  CHECK(ok.p >= 0.001);
  CHECK(ok.p <= 0.999);

  CHECK_THROWS(rank_probe(raw, 0));
}

TEST_CASE("linear complexity of raw and scrambled bit positions") {
  // raw: every bit position obeys the 64-term recurrence exactly
  for (unsigned bit : {0u, 5u, 31u, 63u}) {
    BitStream s = stream(x64raw(), BitView::SingleBit, bit);
    CHECK(linear_complexity(s, 512) == 64);
  }
  // multiplying by an odd constant leaves bits 0 and 1 alone...
  for (unsigned bit : {0u, 1u}) {
    BitStream s = stream(x64star(), BitView::SingleBit, bit);
    CHECK(linear_complexity(s, 512) == 64);
  }
  // ...but drives the higher bits to the probe ceiling
  BitStream five = stream(x64star(), BitView::SingleBit, 5);
  CHECK(linear_complexity(five, 512) == 255);

  // the low two bit streams are bit-for-bit the raw ones
  for (unsigned bit : {0u, 1u}) {
    BitStream a = stream(x64raw(), BitView::SingleBit, bit);
    BitStream b = stream(x64star(), BitView::SingleBit, bit);
    for (int i = 0; i < 1000; i++) CHECK(a.next_bit() == b.next_bit());
  }
}

TEST_CASE("exact equidistribution on exhaustively walkable shapes") {
  Params raw82 = block_params(2, 3, 2, 5, 8);
  CHECK(equidistributed_exactly(raw82, 1));
  CHECK(equidistributed_exactly(raw82, 2));
  // output scrambling permutes words, so the counts survive
  Params star82 = block_params(2, 3, 2, 5, 8, 0xB5);
  CHECK(equidistributed_exactly(star82, 1));
  CHECK(equidistributed_exactly(star82, 2));

  Params raw16 = scalar_params(Variant::A0, 1, 5, 2, 16);
  CHECK(equidistributed_exactly(raw16, 1));
  CHECK(equidistributed_exactly(scalar_params(Variant::A0, 1, 5, 2, 16, 0x9E37), 1));

  // a short-cycle triple cannot cover the whole space
  CHECK(!equidistributed_exactly(scalar_params(Variant::A0, 1, 1, 1, 16), 1));

  CHECK_THROWS(equidistributed_exactly(raw82, 0));
  CHECK_THROWS(equidistributed_exactly(raw82, 3));              // t = 2
  CHECK_THROWS(equidistributed_exactly(block_params(2, 5, 9, 11, 16), 2)); // 32-bit window
}

TEST_CASE("per-bit output periods") {
  CHECK(all_bit_periods_full(block_params(2, 3, 2, 5, 8)));
  CHECK(all_bit_periods_full(scalar_params(Variant::A0, 1, 5, 2, 16)));
  // (1,1,1) at 16 bits cycles after 16 steps and bit 13 already repeats at 8
  CHECK(!all_bit_periods_full(scalar_params(Variant::A0, 1, 1, 1, 16)));
  CHECK_THROWS(all_bit_periods_full(scalar_params(Variant::A1, 12, 25, 27)));
}

TEST_CASE("start-up bias scan on the scrambled single-word generator") {
  EscapeCurve curve = escape_zeroland(x64star());
  REQUIRE(curve.ratio.size() == 1000);
  CHECK(std::abs(curve.mean - 0.5) < 0.0005);
  CHECK(std::abs(curve.stddev - 0.0039) < 0.0039 * 0.30);
  // a 64-bit state mixes before the first sample point; the whole curve is flat
  for (double r : curve.ratio) CHECK(std::abs(r - 0.5) < 0.05);
  CHECK_THROWS(escape_zeroland(block_params(2, 3, 2, 5, 8)));
}
