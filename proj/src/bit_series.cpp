#include "riordan/bit_series.hpp"

#include <algorithm>
#include <bit>

#include "riordan/error.hpp"

namespace riordan {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

bool get_bit(const std::vector<std::uint64_t>& w, std::size_t k) {
  return (w[k / kWordBits] >> (k % kWordBits)) & 1U;
}

void mask_to(std::vector<std::uint64_t>& w, std::size_t bits) {
  w.resize(words_for(bits));
  if (bits % kWordBits != 0 && !w.empty()) w.back() &= (std::uint64_t{1} << (bits % kWordBits)) - 1;
}

// dst ^= src << shift, keeping only bits below dst.size()*64.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift) {
  const std::size_t q = shift / kWordBits;
  const std::size_t r = shift % kWordBits;
  const std::size_t n = dst.size();
  for (std::size_t k = 0; k < src.size() && k + q < n; ++k) {
    const std::uint64_t w = src[k];
    if (w == 0) continue;
    dst[k + q] ^= w << r;
    if (r != 0 && k + q + 1 < n) dst[k + q + 1] ^= w >> (kWordBits - r);
  }
}

// Carry-less product of the first a_bits of a with b, kept to out_bits.
std::vector<std::uint64_t> clmul(const std::vector<std::uint64_t>& a, std::size_t a_bits,
                                 const std::vector<std::uint64_t>& b, std::size_t out_bits) {
  std::vector<std::uint64_t> out(words_for(out_bits), 0);
  const std::size_t limit = std::min(a_bits, out_bits);
  for (std::size_t wi = 0; wi < a.size() && wi * kWordBits < limit; ++wi) {
    std::uint64_t w = a[wi];
    while (w != 0) {
      const std::size_t bit = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      if (bit >= limit) break;
      xor_shifted(out, b, bit);
    }
  }
  mask_to(out, out_bits);
  return out;
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::precision: return "precision error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::invalid_spec: return "invalid spec";
    case ErrorKind::divergence: return "expansion diverged";
    case ErrorKind::not_invertible: return "not invertible";
    case ErrorKind::not_applicable: return "not applicable";
    case ErrorKind::incompatible: return "incompatible operands";
    case ErrorKind::budget: return "budget refusal";
    case ErrorKind::internal: return "internal consistency failure";
  }
  return "error";
}

BitSeries::BitSeries(std::size_t trunc) : words_(words_for(trunc), 0), trunc_(trunc) {
  require(trunc >= 1, ErrorKind::precision, "series truncation must be at least 1");
}

BitSeries BitSeries::one(std::size_t trunc) { return monomial(0, trunc); }

BitSeries BitSeries::monomial(std::size_t k, std::size_t trunc) {
  BitSeries s(trunc);
  if (k < trunc) s.set(k);
  return s;
}

BitSeries BitSeries::all_ones(std::size_t trunc) {
  BitSeries s(trunc);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.clear_tail();
  return s;
}

BitSeries BitSeries::from_support(std::initializer_list<std::size_t> support, std::size_t trunc) {
  return from_support(std::vector<std::size_t>(support), trunc);
}

BitSeries BitSeries::from_support(const std::vector<std::size_t>& support, std::size_t trunc) {
  BitSeries s(trunc);
  for (std::size_t k : support)
    if (k < trunc) s.words_[k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
  return s;
}

BitSeries BitSeries::from_bits(std::string_view bits) {
  BitSeries s(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    require(bits[k] == '0' || bits[k] == '1', ErrorKind::invalid_spec,
            "bit string may only contain 0 and 1");
    if (bits[k] == '1') s.set(k);
  }
  return s;
}

BitSeries BitSeries::from_words(std::vector<std::uint64_t> words, std::size_t trunc) {
  BitSeries s(trunc);
  words.resize(s.words_.size(), 0);
  s.words_ = std::move(words);
  s.clear_tail();
  return s;
}

bool BitSeries::coeff(std::size_t k) const {
  if (k >= trunc_)
    fail(ErrorKind::precision, "coefficient t^" + std::to_string(k) + " requested from a series known mod t^" +
                                   std::to_string(trunc_));
  return get_bit(words_, k);
}

void BitSeries::set(std::size_t k, bool value) {
  if (k >= trunc_) fail(ErrorKind::precision, "cannot set t^" + std::to_string(k) + " past truncation");
  const std::uint64_t m = std::uint64_t{1} << (k % kWordBits);
  if (value)
    words_[k / kWordBits] |= m;
  else
    words_[k / kWordBits] &= ~m;
}

bool BitSeries::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitSeries::valuation() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

std::size_t BitSeries::certified_valuation() const noexcept { return valuation().value_or(trunc_); }

std::optional<std::size_t> BitSeries::degree() const noexcept {
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i] != 0) return i * kWordBits + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
  return std::nullopt;
}

std::size_t BitSeries::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> BitSeries::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitSeries BitSeries::truncated(std::size_t new_trunc) const {
  if (new_trunc > trunc_)
    fail(ErrorKind::precision, "cannot extend a series known mod t^" + std::to_string(trunc_) + " to t^" +
                                   std::to_string(new_trunc));
  BitSeries s(new_trunc);
  std::copy_n(words_.begin(), s.words_.size(), s.words_.begin());
  s.clear_tail();
  return s;
}

bool BitSeries::agrees_with(const BitSeries& other, std::size_t upto) const {
  if (upto == 0) return true;
  return truncated(upto).words_ == other.truncated(upto).words_;
}

bool BitSeries::congruent(const BitSeries& other) const {
  return agrees_with(other, std::min(trunc_, other.trunc_));
}

std::string BitSeries::to_bits() const {
  std::string s(trunc_, '0');
  for (std::size_t k = 0; k < trunc_; ++k)
    if (get_bit(words_, k)) s[k] = '1';
  return s;
}

std::string BitSeries::to_poly() const {
  std::string s;
  for (std::size_t k : support()) {
    if (!s.empty()) s += '+';
    if (k == 0)
      s += '1';
    else if (k == 1)
      s += 't';
    else
      s += "t^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

void BitSeries::clear_tail() noexcept { mask_to(words_, trunc_); }

BitSeries operator+(const BitSeries& a, const BitSeries& b) {
  BitSeries out = a.truncated(std::min(a.trunc(), b.trunc()));
  std::vector<std::uint64_t> w = out.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= b.words()[i];
  return BitSeries::from_words(std::move(w), out.trunc());
}

BitSeries operator*(const BitSeries& a, const BitSeries& b) {
  // Unknown tail of a meets b no lower than a.trunc + val(b), and vice versa.
  const std::size_t va = a.certified_valuation();
  const std::size_t vb = b.certified_valuation();
  const std::size_t t = std::min(a.trunc() + vb, b.trunc() + va);
  return BitSeries::from_words(clmul(a.words(), a.trunc(), b.words(), t), t);
}

BitSeries shift_up(const BitSeries& a, std::size_t k) {
  std::vector<std::uint64_t> out(words_for(a.trunc() + k), 0);
  xor_shifted(out, a.words(), k);
  return BitSeries::from_words(std::move(out), a.trunc() + k);
}

BitSeries shift_down(const BitSeries& a, std::size_t k) {
  if (k == 0) return a;
  require(a.trunc() > k, ErrorKind::precision, "dividing by t^" + std::to_string(k) + " leaves no known coefficients");
  require(a.certified_valuation() >= k, ErrorKind::domain,
          "series is not divisible by t^" + std::to_string(k));
  BitSeries out(a.trunc() - k);
  for (std::size_t i : a.support()) out.set(i - k);
  return out;
}

BitSeries power(const BitSeries& a, std::size_t e) {
  BitSeries result = BitSeries::one(a.trunc());
  BitSeries base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BitSeries reciprocal(const BitSeries& a) {
  require(a.coeff(0), ErrorKind::not_invertible, "1/a needs a(0) = 1");
  // Long division of 1 by a, one degree at a time.
  const std::size_t t = a.trunc();
  std::vector<std::uint64_t> rem(words_for(t), 0);
  rem[0] = 1;
  BitSeries q(t);
  for (std::size_t k = 0; k < t; ++k) {
    if (!get_bit(rem, k)) continue;
    q.set(k);
    xor_shifted(rem, a.words(), k);
    mask_to(rem, t);
  }
  return q;
}

BitSeries divide(const BitSeries& num, const BitSeries& den) {
  const auto v = den.valuation();
  require(v.has_value(), ErrorKind::not_invertible, "division by a series that is zero on its window");
  if (*v == 0) return num * reciprocal(den);
  return shift_down(num, *v) * reciprocal(shift_down(den, *v));
}

BitSeries compose(const BitSeries& g, const BitSeries& f) {
  require(!f.coeff(0), ErrorKind::domain, "composition g(f) needs f(0) = 0");
  const std::size_t vf = f.certified_valuation();
  const std::size_t t = std::min(g.trunc() * vf, f.trunc());
  // Horner over the coefficients of g that can reach degree t-1.
  const std::size_t top = std::min(g.trunc() - 1, (t - 1) / vf);
  std::vector<std::uint64_t> acc(words_for(t), 0);
  for (std::size_t k = top + 1; k-- > 0;) {
    acc = clmul(acc, t, f.words(), t);
    if (g.coeff(k)) acc[0] ^= 1;
  }
  return BitSeries::from_words(std::move(acc), t);
}

BitSeries comp_inverse(const BitSeries& f) {
  require(!f.coeff(0), ErrorKind::domain, "compositional inverse needs f(0) = 0");
  require(f.trunc() >= 2 && f.coeff(1), ErrorKind::not_invertible, "compositional inverse needs [t]f = 1");
  // Solve sum_d c_d f^d = t forward in d; the accumulator holds sum_{j<d} c_j f^j.
  const std::size_t t = f.trunc();
  BitSeries inv(t);
  std::vector<std::uint64_t> acc(words_for(t), 0);
  std::vector<std::uint64_t> pw(words_for(t), 0);
  pw[0] = 1;
  for (std::size_t d = 1; d < t; ++d) {
    pw = clmul(pw, t, f.words(), t);
    const bool c = get_bit(acc, d) != (d == 1);
    if (c) {
      inv.set(d);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= pw[i];
    }
  }
  return inv;
}

BitSeries derivative(const BitSeries& f) {
  require(f.trunc() >= 2, ErrorKind::precision, "derivative of a series known only mod t");
  std::vector<std::uint64_t> w = f.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::uint64_t next = i + 1 < w.size() ? w[i + 1] : 0;
    w[i] = ((w[i] >> 1) | (next << 63)) & 0x5555555555555555ULL;
  }
  return BitSeries::from_words(std::move(w), f.trunc() - 1);
}

BitSeries sqrt_substitute(const BitSeries& g) {
  require(is_even_series(g, g.trunc()), ErrorKind::domain, "g(sqrt t) needs g supported on even indices");
  BitSeries out((g.trunc() + 1) / 2);
  for (std::size_t k : g.support()) out.set(k / 2);
  return out;
}

BitSeries substitute_square(const BitSeries& g) {
  BitSeries out(2 * g.trunc());
  for (std::size_t k : g.support()) out.set(2 * k);
  return out;
}

bool is_even_series(const BitSeries& g, std::size_t upto) {
  for (std::size_t k : g.truncated(upto).support())
    if (k % 2 == 1) return false;
  return true;
}

bool is_odd_series(const BitSeries& g, std::size_t upto) {
  for (std::size_t k : g.truncated(upto).support())
    if (k % 2 == 0) return false;
  return true;
}

}  // namespace riordan
