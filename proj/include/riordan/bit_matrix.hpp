#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace riordan {

// Dense 0/1 matrix over GF(2), rows packed into 64-bit words. Indices are
// 0-based.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  // Rows given as strings of '0'/'1' (whitespace ignored).
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return wpr_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (c % 64);
    if (v)
      bits_[r * wpr_ + c / 64] |= m;
    else
      bits_[r * wpr_ + c / 64] &= ~m;
  }
  void flip(std::size_t r, std::size_t c) noexcept { bits_[r * wpr_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  const std::uint64_t* row(std::size_t r) const noexcept { return bits_.data() + r * wpr_; }
  std::uint64_t* row(std::size_t r) noexcept { return bits_.data() + r * wpr_; }

  std::size_t row_popcount(std::size_t r) const noexcept;
  std::size_t popcount() const noexcept;
  bool is_zero() const noexcept;

  BitMatrix transpose() const;
  // Anti-diagonal flip of the transpose: E * M^T * E for square M.
  BitMatrix flip_transpose() const;
  BitMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  // Row i as a '0'/'1' string, space separated when `sep` is set.
  std::string row_string(std::size_t r, bool sep = false) const;
  std::string to_string(bool sep = false) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

}  // namespace riordan
