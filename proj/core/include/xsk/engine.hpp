#ifndef XSK_ENGINE_HPP
#define XSK_ENGINE_HPP

#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "xsk/params.hpp"

namespace xsk {

// Serialized shape of a 64-bit-word engine: the raw word array plus the
// rotation index. Text form: one word per line (0x-prefixed hex or decimal),
// then the index on the last line.
struct EngineState {
  std::vector<uint64_t> words;
  unsigned p = 0;
  bool operator==(const EngineState&) const = default;
};

template <class W>
class Engine {
  static_assert(std::is_unsigned_v<W> && !std::is_same_v<W, bool>);

 public:
  Engine(const Params& prm, std::span<const W> seed, unsigned p = 0)
      : prm_(prm), t_(prm.t) {
    if (prm.word_bits != std::numeric_limits<W>::digits)
      throw std::invalid_argument("engine word type does not match params.word_bits");
    scrambled_ = prm.scrambled();
    mult_ = scrambled_ ? static_cast<W>(*prm.multiplier) : W(1);
    a_ = prm.a; b_ = prm.b; c_ = prm.c;
    v_ = prm.variant;
    seed_from(seed, p);
  }

  void seed_from(std::span<const W> seed, unsigned p = 0) {
    if (seed.size() != t_)
      throw std::invalid_argument("seed must supply exactly t words");
    if (p >= t_) throw std::invalid_argument("state index out of range");
    bool nonzero = false;
    for (W w : seed) nonzero |= (w != 0);
    if (!nonzero) throw std::invalid_argument("all-zero state is a fixed point");
    s_.assign(seed.begin(), seed.end());
    p_ = (t_ == 1) ? 0 : p;
  }

  void step() {
    if (v_ == Variant::Block) {
      const W s0 = s_[p_];
      p_ = (p_ + 1 == t_) ? 0 : p_ + 1;
      W s1 = s_[p_];
      s1 = W(s1 ^ W(s1 << a_));
      s_[p_] = W(s1 ^ s0 ^ W(s1 >> b_) ^ W(s0 >> c_));
      return;
    }
    W x = s_[0];
    switch (v_) {
      case Variant::A0: x ^= W(x << a_); x ^= W(x >> b_); x ^= W(x << c_); break;
      case Variant::A1: x ^= W(x >> a_); x ^= W(x << b_); x ^= W(x >> c_); break;
      case Variant::A2: x ^= W(x << c_); x ^= W(x >> b_); x ^= W(x << a_); break;
      case Variant::A3: x ^= W(x >> c_); x ^= W(x << b_); x ^= W(x >> a_); break;
      case Variant::A4: x ^= W(x << a_); x ^= W(x << c_); x ^= W(x >> b_); break;
      case Variant::A5: x ^= W(x >> a_); x ^= W(x >> c_); x ^= W(x << b_); break;
      case Variant::A6: x ^= W(x >> b_); x ^= W(x << a_); x ^= W(x << c_); break;
      case Variant::A7: x ^= W(x << b_); x ^= W(x >> a_); x ^= W(x >> c_); break;
      case Variant::Block: break; // unreachable
    }
    s_[0] = x;
  }

  // Current linear output word (the word most recently written).
  W word() const { return s_[p_]; }
  W scramble(W x) const { return scrambled_ ? W(x * mult_) : x; }

  // Advance once; return the (possibly scrambled) output.
  W next() { step(); return scramble(s_[p_]); }
  // Advance once; return the untouched linear word.
  W next_linear() { step(); return s_[p_]; }

  const Params& params() const { return prm_; }
  std::span<const W> words() const { return s_; }
  unsigned index() const { return p_; }
  unsigned word_count() const { return t_; }

  // Logical coordinates: word j counted from the rotation index.
  W logical_word(unsigned j) const { return s_[pos(j)]; }
  void set_logical_words(std::span<const W> ws) {
    if (ws.size() != t_) throw std::invalid_argument("wrong word count");
    for (unsigned j = 0; j < t_; j++) s_[pos(j)] = ws[j];
  }

  EngineState state() const
    requires std::is_same_v<W, uint64_t>
  {
    return EngineState{std::vector<uint64_t>(s_.begin(), s_.end()), p_};
  }

 private:
  unsigned pos(unsigned j) const {
    unsigned k = p_ + j;
    return k >= t_ ? k - t_ : k;
  }

  Params prm_;
  std::vector<W> s_;
  unsigned p_ = 0;
  unsigned t_;
  unsigned a_, b_, c_;
  Variant v_;
  W mult_;
  bool scrambled_;
};

using Engine64 = Engine<uint64_t>;

inline Engine64 make_engine(const Params& prm, const EngineState& st) {
  return Engine64(prm, st.words, st.p);
}

// State with a single bit set (used by the start-up correlation scan).
inline EngineState state_from_bit(unsigned t, unsigned bit) {
  if (bit >= 64 * t) throw std::invalid_argument("bit index out of range");
  EngineState st;
  st.words.assign(t, 0);
  st.words[bit / 64] = uint64_t(1) << (bit % 64);
  return st;
}

inline void write_state_text(std::ostream& out, const EngineState& st) {
  char buf[20];
  for (uint64_t w : st.words) {
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(w));
    out << buf << '\n';
  }
  out << st.p << '\n';
}

inline EngineState parse_state_text(std::istream& in, unsigned t) {
  EngineState st;
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      size_t e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      return true;
    }
    return false;
  };
  for (unsigned i = 0; i < t; i++) {
    if (!next_line())
      throw std::runtime_error("state text: expected " + std::to_string(t) +
                               " words, got " + std::to_string(i));
    int base = 10;
    std::string s = line;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) { base = 16; s = s.substr(2); }
    size_t used = 0;
    uint64_t w = std::stoull(s, &used, base);
    if (used != s.size())
      throw std::runtime_error("state text: bad word '" + line + "'");
    st.words.push_back(w);
  }
  if (!next_line()) throw std::runtime_error("state text: missing index line");
  size_t used = 0;
  unsigned long p = std::stoul(line, &used, 10);
  if (used != line.size() || p >= t)
    throw std::runtime_error("state text: bad index '" + line + "'");
  st.p = static_cast<unsigned>(p);
  return st;
}

} // namespace xsk

#endif
