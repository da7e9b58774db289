#ifndef XSK_SEED_SCHEDULE_HPP
#define XSK_SEED_SCHEDULE_HPP

#include <cstdint>
#include <vector>

#include "xsk/engine.hpp"

namespace xsk {

// Deterministic seed ladder: seed i is the integer 1 + i*floor(2^n/count)
// spread over the state in little-endian word order, rotation index 0.
// Walking i = 0..count-1 places starting points roughly evenly around the
// full state space without ever touching system entropy.
EngineState schedule_seed(unsigned state_bits, unsigned index, unsigned count = 100);
std::vector<EngineState> schedule_seeds(unsigned state_bits, unsigned count = 100);

} // namespace xsk

#endif
