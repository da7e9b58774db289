#include "xsk/jump.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xsk {

GF2Poly jump_poly(const GF2Poly& char_poly, const mpz_class& distance) {
  if (distance < 0) throw std::invalid_argument("negative jump distance");
  ReduceCtx ctx(char_poly);
  return ctx.powmod_x(distance);
}

JumpMask make_jump_mask(const Params& prm, const mpz_class& distance,
                        const GF2Poly& char_poly) {
  if (prm.word_bits != 64)
    throw std::invalid_argument("jump masks are defined for 64-bit words");
  if (char_poly.degree() != static_cast<int64_t>(prm.state_bits()))
    throw std::invalid_argument("characteristic polynomial degree must equal state width");
  JumpMask m;
  m.distance = distance;
  m.t = prm.t;
  m.a = prm.a; m.b = prm.b; m.c = prm.c;
  m.words = jump_poly(char_poly, distance).padded_words(prm.t);
  return m;
}

void apply_jump(Engine64& eng, const JumpMask& mask) {
  const Params& prm = eng.params();
  if (prm.t != mask.t || prm.a != mask.a || prm.b != mask.b || prm.c != mask.c)
    throw std::invalid_argument("mask was built for " +
                                Params{Variant::A0, mask.a, mask.b, mask.c, mask.t}.id() +
                                ", engine is " + prm.id());
  bool any = false;
  for (uint64_t w : mask.words) any |= (w != 0);
  if (!any) throw std::invalid_argument("degenerate all-zero jump mask");
  std::vector<uint64_t> acc(prm.t, 0);
  for (unsigned i = 0; i < mask.t; i++)
    for (unsigned bit = 0; bit < 64; bit++) {
      if ((mask.words[i] >> bit) & 1)
        for (unsigned j = 0; j < prm.t; j++) acc[j] ^= eng.logical_word(j);
      eng.step();
    }
  eng.set_logical_words(acc);
}

std::string format_distance(const mpz_class& d) {
  if (d > 0 && mpz_popcount(d.get_mpz_t()) == 1) {
    size_t e = mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
    if (e >= 16) return "2^" + std::to_string(e); // small counts read better plain
  }
  return d.get_str();
}

mpz_class parse_distance(const std::string& s) {
  mpz_class d;
  if (s.rfind("2^", 0) == 0) {
    unsigned long e;
    try {
      size_t used = 0;
      e = std::stoul(s.substr(2), &used);
      if (used != s.size() - 2) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad jump distance '" + s + "'");
    }
    mpz_ui_pow_ui(d.get_mpz_t(), 2, e);
    return d;
  }
  if (mpz_set_str(d.get_mpz_t(), s.c_str(), 10) != 0 || d < 0)
    throw std::invalid_argument("bad jump distance '" + s + "'");
  return d;
}

void write_mask_text(std::ostream& out, const JumpMask& mask) {
  out << "j=" << format_distance(mask.distance) << " t=" << mask.t
      << " abc=" << mask.a << ',' << mask.b << ',' << mask.c << '\n';
  char buf[17];
  for (uint64_t w : mask.words) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out << buf << '\n';
  }
}

JumpMask parse_mask_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("mask text: empty input");
  JumpMask m;
  {
    std::string tok;
    std::istringstream hs(line);
    bool got_j = false, got_t = false, got_abc = false;
    while (hs >> tok) {
      if (tok.rfind("j=", 0) == 0) {
        m.distance = parse_distance(tok.substr(2));
        got_j = true;
      } else if (tok.rfind("t=", 0) == 0) {
        m.t = static_cast<unsigned>(std::stoul(tok.substr(2)));
        got_t = true;
      } else if (tok.rfind("abc=", 0) == 0) {
        if (std::sscanf(tok.c_str() + 4, "%u,%u,%u", &m.a, &m.b, &m.c) != 3)
          throw std::runtime_error("mask text: bad abc in header");
        got_abc = true;
      } else {
        throw std::runtime_error("mask text: unknown header token '" + tok + "'");
      }
    }
    if (!got_j || !got_t || !got_abc)
      throw std::runtime_error("mask text: header needs j=, t= and abc=");
    if (m.t == 0) throw std::runtime_error("mask text: t must be positive");
  }
  for (unsigned i = 0; i < m.t; i++) {
    if (!std::getline(in, line))
      throw std::runtime_error("mask text: expected " + std::to_string(m.t) + " words");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t used = 0;
    uint64_t w = 0;
    try {
      w = std::stoull(line, &used, 16);
    } catch (...) {
      used = 0;
    }
    if (used != line.size() || line.empty())
      throw std::runtime_error("mask text: bad word '" + line + "'");
    m.words.push_back(w);
  }
  return m;
}

} // namespace xsk
