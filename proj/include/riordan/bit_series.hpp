#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace riordan {

// Truncated formal power series over GF(2). Coefficients at indices
// 0..trunc()-1 are known exactly; anything at or past trunc() is unknown and
// may not be read.
class BitSeries {
 public:
  explicit BitSeries(std::size_t trunc = 1);

  static BitSeries zero(std::size_t trunc) { return BitSeries(trunc); }
  static BitSeries one(std::size_t trunc);
  static BitSeries monomial(std::size_t k, std::size_t trunc);
  static BitSeries all_ones(std::size_t trunc);
  static BitSeries from_support(std::initializer_list<std::size_t> support, std::size_t trunc);
  static BitSeries from_support(const std::vector<std::size_t>& support, std::size_t trunc);
  // "1101" -> 1 + t + t^3 with trunc 4.
  static BitSeries from_bits(std::string_view bits);
  static BitSeries from_words(std::vector<std::uint64_t> words, std::size_t trunc);

  std::size_t trunc() const noexcept { return trunc_; }
  bool coeff(std::size_t k) const;
  bool operator[](std::size_t k) const { return coeff(k); }
  void set(std::size_t k, bool value = true);

  bool is_zero() const noexcept;
  // Index of the lowest set coefficient, if any lies inside the window.
  std::optional<std::size_t> valuation() const noexcept;
  // valuation(), or trunc() when the known window is all zero.
  std::size_t certified_valuation() const noexcept;
  std::optional<std::size_t> degree() const noexcept;
  std::size_t popcount() const noexcept;
  std::vector<std::size_t> support() const;

  BitSeries truncated(std::size_t new_trunc) const;
  // Equal on the first `upto` coefficients; both sides must know them.
  bool agrees_with(const BitSeries& other, std::size_t upto) const;
  // Equal on the common window.
  bool congruent(const BitSeries& other) const;

  std::string to_bits() const;
  std::string to_poly() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitSeries&, const BitSeries&) = default;

 private:
  void clear_tail() noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t trunc_;
};

BitSeries operator+(const BitSeries& a, const BitSeries& b);
BitSeries operator*(const BitSeries& a, const BitSeries& b);
inline BitSeries operator-(const BitSeries& a, const BitSeries& b) { return a + b; }

// t^k * a (window grows by k).
BitSeries shift_up(const BitSeries& a, std::size_t k);
// a / t^k; the low k coefficients must be zero (window shrinks by k).
BitSeries shift_down(const BitSeries& a, std::size_t k);

BitSeries power(const BitSeries& a, std::size_t e);
// 1/a, requires a(0) = 1.
BitSeries reciprocal(const BitSeries& a);
// num/den; a common power of t is cancelled first.
BitSeries divide(const BitSeries& num, const BitSeries& den);

BitSeries compose(const BitSeries& g, const BitSeries& f);
BitSeries comp_inverse(const BitSeries& f);
BitSeries derivative(const BitSeries& f);
// g(sqrt t) for g supported on even indices.
BitSeries sqrt_substitute(const BitSeries& g);
// g(t^2); over GF(2) this is also g(t)^2, but with a doubled window.
BitSeries substitute_square(const BitSeries& g);

bool is_even_series(const BitSeries& g, std::size_t upto);
bool is_odd_series(const BitSeries& g, std::size_t upto);

}  // namespace riordan
