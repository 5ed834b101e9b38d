#include "roundsim/bitmatrix.hpp"

#include <stdexcept>

namespace roundsim {

BitMatrix BitMatrix::identity(size_t dim) {
  BitMatrix m(dim);
  for (size_t i = 0; i < dim; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("BitMatrix product: dimension mismatch");
  }
  BitMatrix result(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    uint64_t* dst = &result.bits_[i * wpr_];
    const uint64_t* src = &bits_[i * wpr_];
    for (size_t w = 0; w < wpr_; ++w) {
      uint64_t word = src[w];
      while (word) {
        size_t j = w * 64 + static_cast<size_t>(__builtin_ctzll(word));
        word &= word - 1;
        other.or_row_into(j, dst);
      }
    }
  }
  return result;
}

void BitMatrix::or_with(const BitMatrix& other) {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("BitMatrix or: dimension mismatch");
  }
  for (size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
}

std::string BitMatrix::bytes() const {
  std::string out;
  out.reserve(8 + bits_.size() * 8);
  uint64_t d = dim_;
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((d >> (8 * b)) & 0xff));
  for (uint64_t word : bits_) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((word >> (8 * b)) & 0xff));
  }
  return out;
}

std::string BitMatrix::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes()) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

uint64_t BitMatrix::fnv1a() const {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace roundsim
