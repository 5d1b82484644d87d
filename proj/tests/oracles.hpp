#pragma once

// Test-side reference computations. Everything here works on plain
// std::vector<int> coefficient lists and integer arithmetic so that it shares
// nothing with the library's packed-word code paths.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle_ref {

using Poly = std::vector<int>;  // coefficients mod 2, index = degree

inline Poly trim(Poly p, std::size_t n) {
  p.resize(n, 0);
  for (auto& c : p) c &= 1;
  return p;
}

inline Poly mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly out(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] ^= (a[i] & b[j]);
  return out;
}

inline Poly add(const Poly& a, const Poly& b, std::size_t n) {
  Poly out(n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i] = (i < a.size() ? a[i] : 0) ^ (i < b.size() ? b[i] : 0);
  return out;
}

inline Poly pow(const Poly& a, std::size_t e, std::size_t n) {
  Poly r(n, 0);
  r[0] = 1;
  for (std::size_t k = 0; k < e; ++k) r = mul(r, a, n);
  return r;
}

// g(f) by summing g_k f^k.
inline Poly compose(const Poly& g, const Poly& f, std::size_t n) {
  Poly out(n, 0), fk(n, 0);
  fk[0] = 1;
  for (std::size_t k = 0; k < g.size() && k < n; ++k) {
    if (g[k] & 1) out = add(out, fk, n);
    fk = mul(fk, f, n);
  }
  return out;
}

inline Poly inverse(const Poly& a, std::size_t n) {
  // Solve a * r = 1 coefficient by coefficient.
  Poly r(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    int s = (k == 0) ? 1 : 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s ^= a[i] & r[k - i];
    r[k] = s;
  }
  return r;
}

// Compositional inverse by brute force: pick each coefficient so that
// f(fbar) matches t one more degree.
inline Poly comp_inverse(const Poly& f, std::size_t n) {
  Poly fb(n, 0);
  if (n > 1) fb[1] = 1;
  for (std::size_t d = 2; d < n; ++d) {
    if (compose(f, fb, d + 1)[d] != 0) fb[d] ^= 1;
  }
  return fb;
}

inline Poly deriv(const Poly& f, std::size_t n) {
  Poly out(n, 0);
  for (std::size_t k = 0; k < n && k + 1 < f.size(); ++k) out[k] = static_cast<int>((k + 1) % 2) & f[k + 1];
  return out;
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t n) {
  Poly p(n);
  for (auto& c : p) c = static_cast<int>(rng() & 1U);
  return p;
}

// [t^i] g f^j via repeated naive multiplication.
inline int riordan_entry(const Poly& g, const Poly& f, std::size_t i, std::size_t j) {
  return mul(g, pow(f, j, i + 1), i + 1)[i];
}

// a_{ij} = [t^{i-2}] g f^{j-1} for i > j >= 1, mirrored.
inline std::vector<std::vector<int>> riordan_graph(const Poly& g, const Poly& f, std::size_t n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = 1; j < i; ++j) {
      const int e = riordan_entry(g, f, i - 2, j - 1);
      a[i - 1][j - 1] = a[j - 1][i - 1] = e;
    }
  return a;
}

// Integer Pascal triangle reduced mod 2.
inline int binomial_mod2(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  std::vector<int> row{1};
  for (std::size_t r = 1; r <= m; ++r) {
    std::vector<int> next(r + 1, 1);
    for (std::size_t c = 1; c < r; ++c) next[c] = (row[c - 1] + row[c]) % 2;
    row = next;
  }
  return row[k];
}

inline std::vector<int> catalan_mod2(std::size_t n) {
  std::vector<int> c(n, 0);
  if (n) c[0] = 1;
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i < m; ++i) c[m] ^= c[i] & c[m - 1 - i];
  return c;
}

inline std::vector<int> motzkin_mod2(std::size_t n) {
  std::vector<int> m(n, 0);
  if (n) m[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    int s = m[k - 1];
    for (std::size_t i = 0; i + 2 <= k; ++i) s ^= m[i] & m[k - 2 - i];
    m[k] = s;
  }
  return m;
}

// Rows of 0/1 characters into a matrix.
inline std::vector<std::vector<int>> from_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<int>> a;
  for (const auto& r : rows) {
    std::vector<int> v;
    for (char c : r) v.push_back(c == '1');
    a.push_back(v);
  }
  return a;
}

}  // namespace oracle_ref
