#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "riordan/bit_matrix.hpp"
#include "riordan/bit_series.hpp"
#include "riordan/execution.hpp"

namespace riordan {

// A pair (g, f) of expanded series; f(0) = 0.
struct RiordanPair {
  BitSeries g;
  BitSeries f;
};

class BinaryRiordanMatrix {
 public:
  BinaryRiordanMatrix(BitMatrix entries, std::optional<RiordanPair> generator = std::nullopt);

  std::size_t order() const noexcept { return m_.rows(); }
  bool entry(std::size_t i, std::size_t j) const noexcept { return m_.get(i, j); }
  const BitMatrix& bits() const noexcept { return m_; }
  const std::optional<RiordanPair>& generator() const noexcept { return gen_; }
  // Unit diagonal, i.e. invertible over GF(2).
  bool is_proper() const noexcept;

  friend bool operator==(const BinaryRiordanMatrix& a, const BinaryRiordanMatrix& b) { return a.m_ == b.m_; }

 private:
  BitMatrix m_;
  std::optional<RiordanPair> gen_;
};

// Rectangular block with entry (i, j) = [t^i] g f^j, 0 <= i < rows, 0 <= j < cols.
BitMatrix riordan_block(const BitSeries& g, const BitSeries& f, std::size_t rows, std::size_t cols);

BinaryRiordanMatrix build_matrix(const BitSeries& g, const BitSeries& f, std::size_t n);

bool is_proper(const BitSeries& g, const BitSeries& f);

struct SequencePair {
  BitSeries a_seq;
  BitSeries z_seq;
  // Zero run after a_0 in the A-sequence; empty if no further 1 in the window.
  std::optional<std::size_t> gap_ell;
};

std::optional<std::size_t> leading_gap(const BitSeries& a_seq);

// A-sequence, computed as t / fbar and by solving the row recurrence; the two
// must agree and the recurrence must reproduce every entry.
BitSeries a_sequence(const BinaryRiordanMatrix& m);
// Z-sequence, n-1 entries from the first-column recurrence, cross-checked
// against g = 1/(1 - t Z(f)) when a generator is attached.
BitSeries z_sequence(const BinaryRiordanMatrix& m);
SequencePair sequences(const BinaryRiordanMatrix& m);

// Rebuild an order-n matrix from b_00 = 1 and the two recurrences.
BinaryRiordanMatrix rebuild_from_sequences(const SequencePair& seq, std::size_t n);

// (g, f) * (h, l) = (g h(f), l(f)).
RiordanPair riordan_multiply(const RiordanPair& a, const RiordanPair& b);
// (1/g(fbar), fbar).
RiordanPair riordan_inverse(const RiordanPair& a);

// Generator of E M^T E for M the order-n matrix of (g, f).
RiordanPair flip_transpose(const BitSeries& g, const BitSeries& f, std::size_t n);

struct MatrixCensus {
  std::size_t total = 0;
  std::size_t invertible = 0;
  std::vector<BinaryRiordanMatrix> matrices;  // sorted by packed rows
};

inline constexpr std::size_t kMaxCensusOrder = 6;

MatrixCensus enumerate_order_n(std::size_t n, Execution exec = Execution::parallel);

}  // namespace riordan
