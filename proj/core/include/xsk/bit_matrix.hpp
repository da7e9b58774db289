#ifndef XSK_BIT_MATRIX_HPP
#define XSK_BIT_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "xsk/params.hpp"

namespace xsk {

// Square matrix over GF(2), row-major packed 64 bits per word.
// States are row vectors; one engine step is v -> v * M.
class BitMatrix {
 public:
  explicit BitMatrix(size_t n);
  static BitMatrix identity(size_t n);

  size_t dim() const { return n_; }
  size_t words_per_row() const { return wpr_; }

  bool bit(size_t i, size_t j) const;
  void set(size_t i, size_t j);
  std::span<const uint64_t> row(size_t i) const;
  std::span<uint64_t> row(size_t i);

  BitMatrix& operator^=(const BitMatrix& o);
  static BitMatrix mul(const BitMatrix& a, const BitMatrix& b);

  // packed row vector (n bits) times this matrix
  std::vector<uint64_t> apply(std::span<const uint64_t> v) const;

  size_t rank() const;
  bool operator==(const BitMatrix&) const = default;

 private:
  size_t n_, wpr_;
  std::vector<uint64_t> bits_;
};

enum class ShiftDir { Left, Right }; // Left = toward higher bit positions

// I + S^k where S shifts a w-bit word by k in the given direction.
BitMatrix shift_xor_matrix(size_t w, unsigned k, ShiftDir d);

// One-step transition matrix of the engine described by prm (scrambling has
// no effect on the state, so it is ignored here). Scalar variants are built
// as the product of their three shift-xor factors in application order;
// block shapes from the word-level recurrence in logical coordinates, i.e.
// coordinate w*i+j is bit j of logical word i.
BitMatrix transform_of(const Params& prm);

} // namespace xsk

#endif
