#include "xsk/gf2_poly.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace xsk {
namespace detail {

void clmul64_portable(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
  lo = (b & 1) ? a : 0;
  hi = 0;
  for (int i = 1; i < 64; i++) {
    uint64_t m = uint64_t(0) - ((b >> i) & 1);
    lo ^= (a << i) & m;
    hi ^= (a >> (64 - i)) & m;
  }
}

#if defined(__PCLMUL__)
void clmul64(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
  __m128i r = _mm_clmulepi64_si128(_mm_set_epi64x(0, static_cast<long long>(a)),
                                   _mm_set_epi64x(0, static_cast<long long>(b)), 0);
  lo = static_cast<uint64_t>(_mm_cvtsi128_si64(r));
  hi = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(r, 8)));
}
#else
void clmul64(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
  clmul64_portable(a, b, lo, hi);
}
#endif

} // namespace detail

GF2Poly GF2Poly::monomial(size_t e) {
  GF2Poly p;
  p.w_.assign(e / 64 + 1, 0);
  p.w_[e / 64] = uint64_t(1) << (e % 64);
  return p;
}

GF2Poly GF2Poly::from_words(std::vector<uint64_t> w) {
  GF2Poly p;
  p.w_ = std::move(w);
  p.trim();
  return p;
}

void GF2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

int64_t GF2Poly::degree() const {
  if (w_.empty()) return -1;
  return static_cast<int64_t>(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
}

bool GF2Poly::bit(size_t e) const {
  size_t j = e / 64;
  return j < w_.size() && ((w_[j] >> (e % 64)) & 1);
}

void GF2Poly::set_bit(size_t e) {
  size_t j = e / 64;
  if (j >= w_.size()) w_.resize(j + 1, 0);
  w_[j] |= uint64_t(1) << (e % 64);
}

size_t GF2Poly::weight() const {
  size_t n = 0;
  for (uint64_t w : w_) n += static_cast<size_t>(std::popcount(w));
  return n;
}

std::vector<uint64_t> GF2Poly::padded_words(size_t k) const {
  if (w_.size() > k) throw std::invalid_argument("polynomial wider than requested packing");
  std::vector<uint64_t> out(w_);
  out.resize(k, 0);
  return out;
}

GF2Poly& GF2Poly::operator^=(const GF2Poly& o) {
  if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
  for (size_t i = 0; i < o.w_.size(); i++) w_[i] ^= o.w_[i];
  trim();
  return *this;
}

GF2Poly GF2Poly::shifted_left(size_t k) const {
  if (is_zero() || k == 0) {
    GF2Poly r = *this;
    return r;
  }
  size_t wk = k / 64, bk = k % 64;
  GF2Poly r;
  r.w_.assign(w_.size() + wk + 1, 0);
  for (size_t i = 0; i < w_.size(); i++) {
    r.w_[i + wk] ^= w_[i] << bk;
    if (bk) r.w_[i + wk + 1] ^= w_[i] >> (64 - bk);
  }
  r.trim();
  return r;
}

GF2Poly GF2Poly::shifted_right(size_t k) const {
  size_t wk = k / 64, bk = k % 64;
  if (wk >= w_.size()) return {};
  GF2Poly r;
  r.w_.assign(w_.size() - wk, 0);
  for (size_t i = wk; i < w_.size(); i++) {
    r.w_[i - wk] |= w_[i] >> bk;
    if (bk && i + 1 < w_.size()) r.w_[i - wk] |= w_[i + 1] << (64 - bk);
  }
  r.trim();
  return r;
}

void GF2Poly::truncate(size_t bits) {
  size_t full = bits / 64, rem = bits % 64;
  if (w_.size() > full + (rem ? 1 : 0)) w_.resize(full + (rem ? 1 : 0));
  if (rem && w_.size() == full + 1) w_[full] &= (uint64_t(1) << rem) - 1;
  trim();
}

GF2Poly GF2Poly::reversed(size_t n) const {
  if (degree() > static_cast<int64_t>(n))
    throw std::invalid_argument("reversal width below degree");
  GF2Poly r;
  for (size_t e = 0; e <= n; e++)
    if (bit(e)) r.set_bit(n - e);
  return r;
}

GF2Poly GF2Poly::mul(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  GF2Poly r;
  r.w_.assign(a.w_.size() + b.w_.size(), 0);
  for (size_t i = 0; i < a.w_.size(); i++) {
    if (!a.w_[i]) continue;
    for (size_t j = 0; j < b.w_.size(); j++) {
      if (!b.w_[j]) continue;
      uint64_t lo, hi;
      detail::clmul64(a.w_[i], b.w_[j], lo, hi);
      r.w_[i + j] ^= lo;
      r.w_[i + j + 1] ^= hi;
    }
  }
  r.trim();
  return r;
}

// Squaring just spreads bits: table maps a byte to its 16-bit dilation.
static constexpr std::array<uint16_t, 256> make_spread() {
  std::array<uint16_t, 256> t{};
  for (unsigned v = 0; v < 256; v++) {
    uint16_t s = 0;
    for (unsigned i = 0; i < 8; i++)
      if (v & (1u << i)) s |= static_cast<uint16_t>(1u << (2 * i));
    t[v] = s;
  }
  return t;
}
static constexpr std::array<uint16_t, 256> kSpread = make_spread();

GF2Poly GF2Poly::square(const GF2Poly& a) {
  GF2Poly r;
  r.w_.assign(2 * a.w_.size(), 0);
  for (size_t i = 0; i < a.w_.size(); i++) {
    uint64_t w = a.w_[i];
    uint64_t lo = 0, hi = 0;
    for (int k = 0; k < 4; k++) {
      lo |= static_cast<uint64_t>(kSpread[(w >> (8 * k)) & 0xff]) << (16 * k);
      hi |= static_cast<uint64_t>(kSpread[(w >> (8 * k + 32)) & 0xff]) << (16 * k);
    }
    r.w_[2 * i] = lo;
    r.w_[2 * i + 1] = hi;
  }
  r.trim();
  return r;
}

void GF2Poly::divmod(const GF2Poly& num, const GF2Poly& den, GF2Poly& q, GF2Poly& r) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  q = {};
  r = num;
  const int64_t dd = den.degree();
  int64_t dr = r.degree();
  if (dr < dd) return;
  q.w_.assign(static_cast<size_t>(dr - dd) / 64 + 1, 0);
  // highest set bit of r at position <= d, or -1
  auto top_below = [&r](int64_t d) -> int64_t {
    while (d >= 0) {
      size_t j = static_cast<size_t>(d) / 64;
      unsigned used = static_cast<unsigned>(d % 64) + 1;
      uint64_t m = 0;
      if (j < r.w_.size())
        m = r.w_[j] & (used == 64 ? ~uint64_t(0) : (uint64_t(1) << used) - 1);
      if (m) return static_cast<int64_t>(64 * j + 63 - std::countl_zero(m));
      d = static_cast<int64_t>(j) * 64 - 1;
    }
    return -1;
  };
  while (dr >= dd) {
    const size_t k = static_cast<size_t>(dr - dd);
    q.w_[k / 64] |= uint64_t(1) << (k % 64);
    // r ^= den << k, in place; den << k never reaches past bit dr
    const size_t wk = k / 64, bk = k % 64;
    for (size_t i = 0; i < den.w_.size(); i++) {
      r.w_[i + wk] ^= den.w_[i] << bk;
      if (bk && i + wk + 1 < r.w_.size()) r.w_[i + wk + 1] ^= den.w_[i] >> (64 - bk);
    }
    dr = top_below(dr - 1);
  }
  r.trim();
  q.trim();
}

GF2Poly GF2Poly::mod(const GF2Poly& num, const GF2Poly& den) {
  GF2Poly q, r;
  divmod(num, den, q, r);
  return r;
}

GF2Poly GF2Poly::gcd(GF2Poly a, GF2Poly b) {
  while (!b.is_zero()) {
    GF2Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

GF2Poly GF2Poly::lcm(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  GF2Poly g = gcd(a, b), q, r;
  divmod(mul(a, b), g, q, r);
  return q;
}

std::string GF2Poly::to_sparse_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int64_t e = degree(); e >= 0; e--) {
    if (!bit(static_cast<size_t>(e))) continue;
    if (!s.empty()) s += " + ";
    if (e == 0) s += "1";
    else if (e == 1) s += "x";
    else s += "x^" + std::to_string(e);
  }
  return s;
}

std::string GF2Poly::to_hex_words() const {
  if (is_zero()) return "0000000000000000";
  std::string s;
  char buf[17];
  for (size_t i = 0; i < w_.size(); i++) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w_[i]));
    if (i) s += ' ';
    s += buf;
  }
  return s;
}

GF2Poly GF2Poly::parse(const std::string& text) {
  if (text.find('x') != std::string::npos || text == "0" || text == "1") {
    // sparse form
    GF2Poly p;
    std::istringstream in(text);
    std::string tok;
    bool any = false;
    while (in >> tok) {
      if (tok == "+") continue;
      any = true;
      if (tok == "0") continue;
      if (tok == "1") { p.set_bit(0); continue; }
      if (tok == "x") { p.set_bit(1); continue; }
      if (tok.rfind("x^", 0) == 0) {
        size_t used = 0;
        unsigned long long e = std::stoull(tok.substr(2), &used);
        if (used != tok.size() - 2) throw std::invalid_argument("bad term '" + tok + "'");
        p.set_bit(static_cast<size_t>(e));
        continue;
      }
      throw std::invalid_argument("bad polynomial term '" + tok + "'");
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return p;
  }
  // hex words, lowest first
  std::istringstream in(text);
  std::string tok;
  std::vector<uint64_t> ws;
  while (in >> tok) {
    if (tok.rfind("0x", 0) == 0 || tok.rfind("0X", 0) == 0) tok = tok.substr(2);
    size_t used = 0;
    uint64_t w = std::stoull(tok, &used, 16);
    if (used != tok.size()) throw std::invalid_argument("bad hex word '" + tok + "'");
    ws.push_back(w);
  }
  if (ws.empty()) throw std::invalid_argument("empty polynomial text");
  return from_words(std::move(ws));
}

ReduceCtx::ReduceCtx(GF2Poly P) : P_(std::move(P)) {
  if (P_.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
  n_ = static_cast<size_t>(P_.degree());
  GF2Poly q, r;
  GF2Poly::divmod(GF2Poly::monomial(2 * n_), P_, q, r);
  mu_ = std::move(q);
}

GF2Poly ReduceCtx::reduce(const GF2Poly& f) const {
  if (f.degree() < static_cast<int64_t>(n_)) return f;
  if (f.degree() > static_cast<int64_t>(2 * n_ - 1)) {
    GF2Poly q, r;
    GF2Poly::divmod(f, P_, q, r);
    return r;
  }
  GF2Poly a = f.shifted_right(n_);
  GF2Poly q = GF2Poly::mul(a, mu_).shifted_right(n_);
  GF2Poly r = f ^ GF2Poly::mul(q, P_);
  r.truncate(n_);
  return r;
}

GF2Poly ReduceCtx::mulmod(const GF2Poly& a, const GF2Poly& b) const {
  return reduce(GF2Poly::mul(reduce(a), reduce(b)));
}

GF2Poly ReduceCtx::sqrmod(const GF2Poly& a) const { return reduce(GF2Poly::square(a)); }

GF2Poly ReduceCtx::mulx(GF2Poly f) const {
  f = f.shifted_left(1);
  if (f.bit(n_)) f ^= P_;
  return f;
}

GF2Poly ReduceCtx::powmod(const GF2Poly& base, const mpz_class& e) const {
  if (base == GF2Poly::x()) return powmod_x(e);
  GF2Poly b = reduce(base);
  GF2Poly r = GF2Poly::one();
  if (mpz_sgn(e.get_mpz_t()) == 0) return reduce(r);
  for (auto i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; i--) {
    r = sqrmod(r);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = mulmod(r, b);
  }
  return r;
}

GF2Poly ReduceCtx::powmod_x(const mpz_class& e) const {
  GF2Poly r = GF2Poly::one();
  if (mpz_sgn(e.get_mpz_t()) == 0) return reduce(r);
  for (auto i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; i--) {
    r = sqrmod(r);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = mulx(std::move(r));
  }
  return r;
}

} // namespace xsk
