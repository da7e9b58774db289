#include "xsk/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace xsk {

BitMatrix::BitMatrix(size_t n) : n_(n), wpr_((n + 63) / 64), bits_(n * wpr_, 0) {
  if (n == 0) throw std::invalid_argument("empty matrix");
}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n);
  for (size_t i = 0; i < n; i++) m.set(i, i);
  return m;
}

bool BitMatrix::bit(size_t i, size_t j) const {
  return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1;
}

void BitMatrix::set(size_t i, size_t j) {
  bits_[i * wpr_ + j / 64] |= uint64_t(1) << (j % 64);
}

std::span<const uint64_t> BitMatrix::row(size_t i) const {
  return {bits_.data() + i * wpr_, wpr_};
}

std::span<uint64_t> BitMatrix::row(size_t i) {
  return {bits_.data() + i * wpr_, wpr_};
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("dimension mismatch");
  for (size_t i = 0; i < bits_.size(); i++) bits_[i] ^= o.bits_[i];
  return *this;
}

BitMatrix BitMatrix::mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
  BitMatrix r(a.n_);
  for (size_t i = 0; i < a.n_; i++) {
    uint64_t* out = r.bits_.data() + i * r.wpr_;
    for (size_t jw = 0; jw < a.wpr_; jw++) {
      uint64_t w = a.bits_[i * a.wpr_ + jw];
      while (w) {
        size_t k = 64 * jw + static_cast<size_t>(std::countr_zero(w));
        w &= w - 1;
        const uint64_t* src = b.bits_.data() + k * b.wpr_;
        for (size_t m = 0; m < b.wpr_; m++) out[m] ^= src[m];
      }
    }
  }
  return r;
}

std::vector<uint64_t> BitMatrix::apply(std::span<const uint64_t> v) const {
  if (v.size() != wpr_) throw std::invalid_argument("vector width mismatch");
  std::vector<uint64_t> out(wpr_, 0);
  for (size_t jw = 0; jw < wpr_; jw++) {
    uint64_t w = v[jw];
    while (w) {
      size_t k = 64 * jw + static_cast<size_t>(std::countr_zero(w));
      w &= w - 1;
      const uint64_t* src = bits_.data() + k * wpr_;
      for (size_t m = 0; m < wpr_; m++) out[m] ^= src[m];
    }
  }
  return out;
}

size_t BitMatrix::rank() const {
  std::vector<uint64_t> rows(bits_);
  size_t rank = 0;
  for (size_t col = 0; col < n_ && rank < n_; col++) {
    size_t jw = col / 64;
    uint64_t mask = uint64_t(1) << (col % 64);
    size_t pivot = rank;
    while (pivot < n_ && !(rows[pivot * wpr_ + jw] & mask)) pivot++;
    if (pivot == n_) continue;
    if (pivot != rank)
      for (size_t m = 0; m < wpr_; m++)
        std::swap(rows[pivot * wpr_ + m], rows[rank * wpr_ + m]);
    for (size_t i = pivot + 1; i < n_; i++)
      if (rows[i * wpr_ + jw] & mask)
        for (size_t m = 0; m < wpr_; m++) rows[i * wpr_ + m] ^= rows[rank * wpr_ + m];
    rank++;
  }
  return rank;
}

BitMatrix shift_xor_matrix(size_t w, unsigned k, ShiftDir d) {
  if (k == 0 || k >= w) throw std::invalid_argument("shift amount out of range");
  BitMatrix m = BitMatrix::identity(w);
  for (size_t i = 0; i < w; i++) {
    if (d == ShiftDir::Left) {
      if (i + k < w) m.set(i, i + k);
    } else {
      if (i >= k) m.set(i, i - k);
    }
  }
  return m;
}

BitMatrix transform_of(const Params& prm) {
  const size_t w = prm.word_bits;
  if (prm.variant != Variant::Block) {
    struct Step { char sel; ShiftDir d; };
    static const Step kOrders[8][3] = {
        {{'a', ShiftDir::Left}, {'b', ShiftDir::Right}, {'c', ShiftDir::Left}},   // A0
        {{'a', ShiftDir::Right}, {'b', ShiftDir::Left}, {'c', ShiftDir::Right}},  // A1
        {{'c', ShiftDir::Left}, {'b', ShiftDir::Right}, {'a', ShiftDir::Left}},   // A2
        {{'c', ShiftDir::Right}, {'b', ShiftDir::Left}, {'a', ShiftDir::Right}},  // A3
        {{'a', ShiftDir::Left}, {'c', ShiftDir::Left}, {'b', ShiftDir::Right}},   // A4
        {{'a', ShiftDir::Right}, {'c', ShiftDir::Right}, {'b', ShiftDir::Left}},  // A5
        {{'b', ShiftDir::Right}, {'a', ShiftDir::Left}, {'c', ShiftDir::Left}},   // A6
        {{'b', ShiftDir::Left}, {'a', ShiftDir::Right}, {'c', ShiftDir::Right}},  // A7
    };
    const Step* order = kOrders[static_cast<unsigned>(prm.variant)];
    auto amount = [&](char sel) { return sel == 'a' ? prm.a : sel == 'b' ? prm.b : prm.c; };
    BitMatrix m = shift_xor_matrix(w, amount(order[0].sel), order[0].d);
    m = BitMatrix::mul(m, shift_xor_matrix(w, amount(order[1].sel), order[1].d));
    m = BitMatrix::mul(m, shift_xor_matrix(w, amount(order[2].sel), order[2].d));
    return m;
  }

  // Block step in logical coordinates (word j = s[(p+j)%t], word 0 newest).
  // The freshly written word becomes logical 0 and old word 0 survives as
  // logical t-1: (l0,...,l_{t-1}) -> (l0*(I+R^c) + l1*(I+L^a)(I+R^b),
  // l2, ..., l_{t-1}, l0).  Word 1 is consumed outright.
  const size_t t = prm.t, n = t * w;
  BitMatrix m(n);
  BitMatrix b0 = shift_xor_matrix(w, prm.c, ShiftDir::Right);
  BitMatrix b1 = BitMatrix::mul(shift_xor_matrix(w, prm.a, ShiftDir::Left),
                                shift_xor_matrix(w, prm.b, ShiftDir::Right));
  for (size_t i = 2; i < t; i++)
    for (size_t j = 0; j < w; j++) m.set(i * w + j, (i - 1) * w + j);
  for (size_t j = 0; j < w; j++) {
    m.set(0 * w + j, (t - 1) * w + j);
    for (size_t j2 = 0; j2 < w; j2++) {
      if (b0.bit(j, j2)) m.set(0 * w + j, 0 * w + j2);
      if (b1.bit(j, j2)) m.set(1 * w + j, 0 * w + j2);
    }
  }
  return m;
}

} // namespace xsk
