#include "xsk/params.hpp"

#include <stdexcept>

namespace xsk {

const char* variant_name(Variant v) {
  static const char* names[] = {"A0", "A1", "A2", "A3",
                                "A4", "A5", "A6", "A7", "Block"};
  return names[static_cast<unsigned>(v)];
}

Variant parse_variant(const std::string& s) {
  if (s.size() == 2 && (s[0] == 'A' || s[0] == 'a') && s[1] >= '0' && s[1] <= '7')
    return static_cast<Variant>(s[1] - '0');
  throw std::invalid_argument("unknown variant '" + s + "' (expected A0..A7)");
}

std::string Params::id() const {
  return "x" + std::to_string(state_bits()) + "(" + std::to_string(a) + "," +
         std::to_string(b) + "," + std::to_string(c) + ")";
}

static void check_common(unsigned a, unsigned b, unsigned c, unsigned word_bits,
                         const std::optional<uint64_t>& multiplier) {
  if (word_bits != 8 && word_bits != 16 && word_bits != 32 && word_bits != 64)
    throw std::invalid_argument("word_bits must be 8, 16, 32 or 64");
  for (unsigned s : {a, b, c})
    if (s == 0 || s >= word_bits)
      throw std::invalid_argument("shifts must lie in [1, word_bits-1]");
  if (multiplier) {
    if (!(*multiplier & 1)) throw std::invalid_argument("multiplier must be odd");
    if (word_bits < 64 && *multiplier >> word_bits)
      throw std::invalid_argument("multiplier wider than the output word");
  }
}

Params scalar_params(Variant v, unsigned a, unsigned b, unsigned c,
                     unsigned word_bits, std::optional<uint64_t> multiplier) {
  if (v == Variant::Block)
    throw std::invalid_argument("scalar_params: variant must be A0..A7");
  check_common(a, b, c, word_bits, multiplier);
  Params p;
  p.variant = v;
  p.a = a; p.b = b; p.c = c;
  p.t = 1;
  p.word_bits = word_bits;
  p.multiplier = multiplier;
  // In A4..A7 the a- and c-shifts point the same way and are adjacent,
  // so the triple is only defined up to swapping them.
  if (v >= Variant::A4 && a > c) {
    p.a = c; p.c = a;
    p.canonicalized = true;
  }
  return p;
}

Params block_params(unsigned t, unsigned a, unsigned b, unsigned c,
                    unsigned word_bits, std::optional<uint64_t> multiplier) {
  if (t < 2) throw std::invalid_argument("block engines need t >= 2 words");
  check_common(a, b, c, word_bits, multiplier);
  Params p;
  p.variant = Variant::Block;
  p.a = a; p.b = b; p.c = c;
  p.t = t;
  p.word_bits = word_bits;
  p.multiplier = multiplier;
  return p;
}

} // namespace xsk
