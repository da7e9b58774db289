#include "xsk/emit.hpp"

#include <cstring>
#include <ostream>
#include <stdexcept>

namespace xsk {

OutputMode parse_output_mode(const std::string& s) {
  if (s == "raw64") return OutputMode::Raw64;
  if (s == "interleaved32") return OutputMode::Interleaved32;
  if (s == "reversed64") return OutputMode::Reversed64;
  if (s == "unit") return OutputMode::UnitInterval;
  throw std::invalid_argument("unknown output mode '" + s +
                              "' (raw64|interleaved32|reversed64|unit)");
}

const char* output_mode_name(OutputMode m) {
  switch (m) {
    case OutputMode::Raw64: return "raw64";
    case OutputMode::Interleaved32: return "interleaved32";
    case OutputMode::Reversed64: return "reversed64";
    case OutputMode::UnitInterval: return "unit";
  }
  return "?";
}

uint64_t bit_reverse64(uint64_t x) {
  x = ((x & 0x5555555555555555ULL) << 1) | ((x >> 1) & 0x5555555555555555ULL);
  x = ((x & 0x3333333333333333ULL) << 2) | ((x >> 2) & 0x3333333333333333ULL);
  x = ((x & 0x0f0f0f0f0f0f0f0fULL) << 4) | ((x >> 4) & 0x0f0f0f0f0f0f0f0fULL);
  return __builtin_bswap64(x);
}

double to_unit_interval(uint64_t x) { return static_cast<double>(x) * 0x1p-64; }

static void put_le(std::vector<unsigned char>& buf, uint64_t v, int bytes) {
  for (int i = 0; i < bytes; i++) buf.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void append_output(std::vector<unsigned char>& buf, uint64_t x, OutputMode m) {
  switch (m) {
    case OutputMode::Raw64:
      put_le(buf, x, 8);
      break;
    case OutputMode::Interleaved32:
      put_le(buf, x & 0xffffffffu, 4);
      put_le(buf, x >> 32, 4);
      break;
    case OutputMode::Reversed64:
      put_le(buf, bit_reverse64(x), 8);
      break;
    case OutputMode::UnitInterval: {
      double d = to_unit_interval(x);
      uint64_t bits;
      std::memcpy(&bits, &d, 8);
      put_le(buf, bits, 8);
      break;
    }
  }
}

void emit_stream(Engine64& eng, OutputMode m, uint64_t count, std::ostream& out) {
  std::vector<unsigned char> buf;
  buf.reserve(1 << 16);
  for (uint64_t i = 0; i < count; i++) {
    append_output(buf, eng.next(), m);
    if (buf.size() >= (1 << 16) - 8) {
      out.write(reinterpret_cast<const char*>(buf.data()),
                static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  if (!buf.empty())
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
  out.flush();
}

} // namespace xsk
