#ifndef XSK_METRICS_HPP
#define XSK_METRICS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "xsk/engine.hpp"
#include "xsk/min_poly.hpp"
#include "xsk/params.hpp"

namespace xsk {

// ---- start-up bias scan ("how long until a nearly-zero state looks fair") --
struct EscapeCurve {
  std::vector<double> ratio; // ones-ratio at outputs 100, 200, ..., 100000
  double mean = 0, stddev = 0; // over every window position (population form)
};
// For each of the 64t single-bit seeds: run 100000 outputs and take the
// ones-ratio of a 4-word (256-bit) window sliding by one output.  The curve
// is the per-position average over all seeds; mean/stddev cover all ~1e5
// positions, while `ratio` keeps the every-100th grid for plotting.
EscapeCurve escape_zeroland(const Params& prm);

// ---- bit-stream views of an engine's outputs ----
enum class BitView {
  AllBits,   // every output bit, LSB first
  SingleBit, // one chosen bit per output
  High32,    // upper half of each output, LSB first
};

class BitStream {
 public:
  BitStream(Engine64 eng, BitView view, unsigned bit = 0);
  bool next_bit();
  uint64_t next_word(unsigned nbits); // LSB-first packing

 private:
  Engine64 eng_;
  BitView view_;
  unsigned bit_;
  uint64_t cur_ = 0;
  unsigned have_ = 0;
};

// ---- GF(2) rank law ----
struct RankProbe {
  std::array<uint64_t, 4> counts{};  // rank 64, 63, 62, <=61
  std::array<double, 4> expected{};
  double chi2 = 0;
  double p = 1; // upper-tail probability, 3 degrees of freedom
};
// Each trial consumes 4096 fresh bits (64 rows of 64) so matrices are
// independent under the iid model; compares rank frequencies against the
// exact law. Truly random bits pass; bits with 64-step linear structure
// collapse to constant rank and fail spectacularly.
RankProbe rank_probe(BitStream& bits, uint64_t trials = 1000);

unsigned matrix_rank_64(std::array<uint64_t, 64>& rows); // destructive
std::array<double, 4> rank_law_64(); // exact probabilities for the 4 buckets
double chi2_tail_3(double chi2);     // upper tail, 3 dof

// ---- linear complexity ----
// Shortest LFSR reproducing the next `nbits` of the stream.
size_t linear_complexity(BitStream& bits, size_t nbits);

// ---- exhaustive scaled-shape checks ----
// Over one full logical cycle from the word0=1 seed: does every window of
// `tuple_words` consecutive outputs occur exactly 2^(n-kw) times, with the
// all-zero window short by one? Uses the engine's outputs as configured
// (scrambled when a multiplier is set). Needs tuple_words*word_bits <= 26.
bool equidistributed_exactly(const Params& prm, unsigned tuple_words);

// Does every output bit position have the full cycle length as its period?
bool all_bit_periods_full(const Params& prm);

} // namespace xsk

#endif
