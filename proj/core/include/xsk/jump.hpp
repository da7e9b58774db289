#ifndef XSK_JUMP_HPP
#define XSK_JUMP_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "xsk/engine.hpp"
#include "xsk/gf2_poly.hpp"
#include "xsk/params.hpp"

namespace xsk {

// A jump-ahead mask: the coefficients of x^distance mod the characteristic
// polynomial, packed 64 per word (bit b of words[i] is the coefficient of
// x^(64i+b)). Valid for every shift order sharing the (a,b,c) triple, since
// they share the characteristic polynomial.
struct JumpMask {
  mpz_class distance;
  unsigned t = 1;
  unsigned a = 0, b = 0, c = 0;
  std::vector<uint64_t> words;
};

// x^distance mod char_poly.
GF2Poly jump_poly(const GF2Poly& char_poly, const mpz_class& distance);

JumpMask make_jump_mask(const Params& prm, const mpz_class& distance,
                        const GF2Poly& char_poly);

// Advance the engine by mask.distance steps: walk 64t single steps while
// accumulating the logical words wherever the mask has a coefficient, then
// install the accumulator as the new state.
void apply_jump(Engine64& eng, const JumpMask& mask);

// Text form: header "j=<2^k or decimal> t=<t> abc=<a>,<b>,<c>", then one
// 16-digit hex word per line, lowest word first.
void write_mask_text(std::ostream& out, const JumpMask& mask);
JumpMask parse_mask_text(std::istream& in);

mpz_class parse_distance(const std::string& s); // "2^512" or a decimal count
std::string format_distance(const mpz_class& d);

} // namespace xsk

#endif
