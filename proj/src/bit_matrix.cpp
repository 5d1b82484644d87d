#include "riordan/bit_matrix.hpp"

#include <bit>
#include <cctype>

#include "riordan/error.hpp"

namespace riordan {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  std::vector<std::string> clean;
  for (const auto& r : rows) {
    std::string s;
    for (char c : r)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    clean.push_back(s);
  }
  const std::size_t cols = clean.empty() ? 0 : clean.front().size();
  BitMatrix m(clean.size(), cols);
  for (std::size_t i = 0; i < clean.size(); ++i) {
    require(clean[i].size() == cols, ErrorKind::invalid_spec, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      require(clean[i][j] == '0' || clean[i][j] == '1', ErrorKind::invalid_spec, "matrix entries must be 0 or 1");
      if (clean[i][j] == '1') m.set(i, j);
    }
  }
  return m;
}

std::size_t BitMatrix::row_popcount(std::size_t r) const noexcept {
  std::size_t c = 0;
  for (std::size_t w = 0; w < wpr_; ++w) c += static_cast<std::size_t>(std::popcount(row(r)[w]));
  return c;
}

std::size_t BitMatrix::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitMatrix::is_zero() const noexcept {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

BitMatrix BitMatrix::flip_transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(cols_ - 1 - j, rows_ - 1 - i);
  return t;
}

BitMatrix BitMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  require(r0 + rows <= rows_ && c0 + cols <= cols_, ErrorKind::domain, "submatrix out of range");
  BitMatrix s(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (get(r0 + i, c0 + j)) s.set(i, j);
  return s;
}

std::string BitMatrix::row_string(std::size_t r, bool sep) const {
  std::string s;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sep && j) s += ' ';
    s += get(r, j) ? '1' : '0';
  }
  return s;
}

std::string BitMatrix::to_string(bool sep) const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) s += row_string(i, sep) + '\n';
  return s;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::incompatible, "matrix shapes differ");
  BitMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t w = 0; w < a.words_per_row(); ++w) c.row(i)[w] ^= b.row(i)[w];
  return c;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols() == b.rows(), ErrorKind::incompatible, "matrix product shapes differ");
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a.get(i, k))
        for (std::size_t w = 0; w < b.words_per_row(); ++w) c.row(i)[w] ^= b.row(k)[w];
  return c;
}

}  // namespace riordan
