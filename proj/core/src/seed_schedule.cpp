#include "xsk/seed_schedule.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace xsk {

EngineState schedule_seed(unsigned state_bits, unsigned index, unsigned count) {
  if (state_bits == 0 || state_bits % 64 != 0)
    throw std::invalid_argument("state_bits must be a positive multiple of 64");
  if (count == 0 || index >= count)
    throw std::invalid_argument("seed index out of range");
  mpz_class stride = (mpz_class(1) << state_bits) / count;
  mpz_class v = 1 + index * stride;
  EngineState st;
  st.words.assign(state_bits / 64, 0);
  size_t written = 0;
  mpz_export(st.words.data(), &written, -1 /*LSW first*/, sizeof(uint64_t),
             0 /*native endian within words*/, 0, v.get_mpz_t());
  st.p = 0;
  return st;
}

std::vector<EngineState> schedule_seeds(unsigned state_bits, unsigned count) {
  std::vector<EngineState> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; i++) out.push_back(schedule_seed(state_bits, i, count));
  return out;
}

} // namespace xsk
