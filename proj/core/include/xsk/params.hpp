#ifndef XSK_PARAMS_HPP
#define XSK_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace xsk {

// The eight single-word shift orders. A0 is <<a >>b <<c; A1..A7 are the
// remaining sign/order combinations of the same three shifts. Block is the
// multi-word recurrence (t words, three shifts folded across two words).
enum class Variant : uint8_t { A0, A1, A2, A3, A4, A5, A6, A7, Block };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s); // "A0".."A7"

struct Params {
  Variant variant = Variant::A0;
  unsigned a = 0, b = 0, c = 0;
  unsigned t = 1;         // state words
  unsigned word_bits = 64; // 8/16/32 supported for down-scaled exhaustive checks
  std::optional<uint64_t> multiplier; // odd; output scrambling only, state untouched
  bool canonicalized = false; // set when an (a,c) swap normalized the triple

  unsigned state_bits() const { return t * word_bits; }
  bool scrambled() const { return multiplier.has_value(); }
  std::string id() const; // e.g. "x1024(31,11,30)" — variant-independent shape+triple
};

// Factories validate and throw std::invalid_argument on bad input.
// For A4..A7 the two same-direction shifts commute, so (a,c) is normalized
// to a <= c and `canonicalized` records that a swap happened.
Params scalar_params(Variant v, unsigned a, unsigned b, unsigned c,
                     unsigned word_bits = 64,
                     std::optional<uint64_t> multiplier = std::nullopt);
Params block_params(unsigned t, unsigned a, unsigned b, unsigned c,
                    unsigned word_bits = 64,
                    std::optional<uint64_t> multiplier = std::nullopt);

// Multipliers used by the three shipped scrambled generators.
inline constexpr uint64_t kMult64 = 2685821657736338717ULL;
inline constexpr uint64_t kMult1024 = 1181783497276652981ULL;
inline constexpr uint64_t kMult4096 = 8372773778140471301ULL;

} // namespace xsk

#endif
