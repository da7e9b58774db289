#ifndef XSK_EMIT_HPP
#define XSK_EMIT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xsk/engine.hpp"

namespace xsk {

enum class OutputMode {
  Raw64,         // 8 bytes per output, little-endian
  Interleaved32, // lower 32 bits then upper 32 bits, each little-endian
  Reversed64,    // the bit-reversed word, Raw64 framing
  UnitInterval,  // IEEE double of x/2^64 (lossy: 53 of 64 bits survive)
};

OutputMode parse_output_mode(const std::string& s);
const char* output_mode_name(OutputMode m);

uint64_t bit_reverse64(uint64_t x);
// Nearest double to x/2^64; loses the low bits of x by design.
double to_unit_interval(uint64_t x);

// Append the byte framing of one output word.
void append_output(std::vector<unsigned char>& buf, uint64_t x, OutputMode m);

// Drive an engine for `count` outputs, writing framed bytes to `out`.
void emit_stream(Engine64& eng, OutputMode m, uint64_t count, std::ostream& out);

} // namespace xsk

#endif
