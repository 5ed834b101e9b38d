#ifndef ROUNDSIM_BITMATRIX_HPP_
#define ROUNDSIM_BITMATRIX_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace roundsim {

/// Square Boolean matrix with packed bit rows; the type of a letter, word, or
/// Parikh vector in the transition monoid of an automaton. Product is Boolean
/// matrix product implemented as row-wise OR of selected rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(size_t dim)
      : dim_(dim), wpr_((dim + 63) / 64), bits_(dim * ((dim + 63) / 64), 0) {}

  static BitMatrix identity(size_t dim);

  size_t dim() const { return dim_; }
  size_t words_per_row() const { return wpr_; }

  bool get(size_t i, size_t j) const {
    return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(size_t i, size_t j) { bits_[i * wpr_ + j / 64] |= uint64_t{1} << (j % 64); }

  std::span<const uint64_t> row(size_t i) const { return {&bits_[i * wpr_], wpr_}; }

  /// OR `src` row data into an external packed row of the same width.
  void or_row_into(size_t i, uint64_t* dst) const {
    const uint64_t* src = &bits_[i * wpr_];
    for (size_t w = 0; w < wpr_; ++w) dst[w] |= src[w];
  }

  BitMatrix operator*(const BitMatrix& other) const;
  void or_with(const BitMatrix& other);

  bool operator==(const BitMatrix& other) const {
    return dim_ == other.dim_ && bits_ == other.bits_;
  }
  bool operator!=(const BitMatrix& other) const { return !(*this == other); }
  bool operator<(const BitMatrix& other) const {
    return dim_ != other.dim_ ? dim_ < other.dim_ : bits_ < other.bits_;
  }

  /// Canonical byte serialization (dimension followed by packed rows).
  std::string bytes() const;
  std::string hex() const;
  uint64_t fnv1a() const;

 private:
  size_t dim_ = 0;
  size_t wpr_ = 0;
  std::vector<uint64_t> bits_;
};

}  // namespace roundsim

#endif  // ROUNDSIM_BITMATRIX_HPP_
