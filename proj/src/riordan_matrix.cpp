#include "riordan/riordan_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "riordan/error.hpp"

namespace riordan {

BinaryRiordanMatrix::BinaryRiordanMatrix(BitMatrix entries, std::optional<RiordanPair> generator)
    : m_(std::move(entries)), gen_(std::move(generator)) {
  require(m_.rows() == m_.cols(), ErrorKind::domain, "Riordan matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      require(!m_.get(i, j), ErrorKind::domain, "Riordan matrix must be lower triangular");
}

bool BinaryRiordanMatrix::is_proper() const noexcept {
  for (std::size_t i = 0; i < order(); ++i)
    if (!m_.get(i, i)) return false;
  return true;
}

BitMatrix riordan_block(const BitSeries& g, const BitSeries& f, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  require(!f.coeff(0), ErrorKind::domain, "Riordan matrix needs f(0) = 0");
  if (rows == 0 || cols == 0) return m;
  if (g.trunc() < rows || (cols > 1 && f.trunc() < rows))
    fail(ErrorKind::precision, "series known mod t^" + std::to_string(std::min(g.trunc(), f.trunc())) +
                                   " cannot fill " + std::to_string(rows) + " rows");
  BitSeries col = g.truncated(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    if (j > 0) col = (col * f).truncated(rows);
    for (std::size_t i : col.support()) m.set(i, j);
  }
  return m;
}

BinaryRiordanMatrix build_matrix(const BitSeries& g, const BitSeries& f, std::size_t n) {
  require(n >= 1, ErrorKind::domain, "matrix order must be at least 1");
  require(f.trunc() >= n, ErrorKind::precision, "f must be known mod t^" + std::to_string(n));
  return BinaryRiordanMatrix(riordan_block(g, f, n, n), RiordanPair{g, f});
}

bool is_proper(const BitSeries& g, const BitSeries& f) {
  return g.coeff(0) && !f.coeff(0) && f.trunc() >= 2 && f.coeff(1);
}

std::optional<std::size_t> leading_gap(const BitSeries& a_seq) {
  for (std::size_t k = 1; k < a_seq.trunc(); ++k)
    if (a_seq.coeff(k)) return k - 1;
  return std::nullopt;
}

namespace {

void require_sequence_domain(const BinaryRiordanMatrix& m, const char* which) {
  require(m.is_proper(), ErrorKind::not_applicable, std::string("no ") + which + "-sequence: matrix is not proper");
  require(m.order() >= 2, ErrorKind::precision, std::string(which) + "-sequence needs order at least 2");
}

}  // namespace

BitSeries a_sequence(const BinaryRiordanMatrix& m) {
  require_sequence_domain(m, "A");
  const std::size_t n = m.order();
  BitSeries a(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool s = m.entry(i + 1, 1);
    for (std::size_t k = 0; k < i; ++k) s ^= a.coeff(k) && m.entry(i, k);
    a.set(i, s);
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      bool s = false;
      for (std::size_t k = 0; j + k <= i; ++k) s ^= a.coeff(k) && m.entry(i, j + k);
      if (s != m.entry(i + 1, j + 1))
        fail(ErrorKind::internal, "A-sequence recurrence fails at entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
    }
  if (m.generator()) {
    const BitSeries fbar = comp_inverse(m.generator()->f.truncated(n));
    const BitSeries analytic = divide(BitSeries::monomial(1, n), fbar);
    if (!analytic.agrees_with(a, n - 1))
      fail(ErrorKind::internal, "A-sequence from t/fbar (" + analytic.to_bits() + ") disagrees with recurrence (" +
                                    a.to_bits() + ")");
  }
  return a;
}

BitSeries z_sequence(const BinaryRiordanMatrix& m) {
  require_sequence_domain(m, "Z");
  const std::size_t n = m.order();
  BitSeries z(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool s = m.entry(i + 1, 0);
    for (std::size_t k = 0; k < i; ++k) s ^= z.coeff(k) && m.entry(i, k);
    z.set(i, s);
  }
  if (m.generator()) {
    const BitSeries g = m.generator()->g.truncated(n);
    const BitSeries fbar = comp_inverse(m.generator()->f.truncated(n));
    // g = 1/(1 - t Z(f))  <=>  Z = ((g - 1) / (t g)) o fbar
    const BitSeries inner = divide(shift_down(g + BitSeries::one(n), 1), g.truncated(n - 1));
    const BitSeries analytic = compose(inner, fbar);
    if (!analytic.agrees_with(z, n - 1))
      fail(ErrorKind::internal, "Z-sequence from g and fbar (" + analytic.to_bits() + ") disagrees with recurrence (" +
                                    z.to_bits() + ")");
  }
  return z;
}

SequencePair sequences(const BinaryRiordanMatrix& m) {
  BitSeries a = a_sequence(m);
  auto gap = leading_gap(a);
  return SequencePair{std::move(a), z_sequence(m), gap};
}

BinaryRiordanMatrix rebuild_from_sequences(const SequencePair& seq, std::size_t n) {
  require(n >= 1, ErrorKind::domain, "matrix order must be at least 1");
  require(n == 1 || (seq.a_seq.trunc() >= n - 1 && seq.z_seq.trunc() >= n - 1), ErrorKind::precision,
          "sequences too short to rebuild order " + std::to_string(n));
  BitMatrix b(n, n);
  b.set(0, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool z = false;
    for (std::size_t k = 0; k <= i; ++k) z ^= seq.z_seq.coeff(k) && b.get(i, k);
    b.set(i + 1, 0, z);
    for (std::size_t j = 0; j <= i; ++j) {
      bool s = false;
      for (std::size_t k = 0; j + k <= i; ++k) s ^= seq.a_seq.coeff(k) && b.get(i, j + k);
      b.set(i + 1, j + 1, s);
    }
  }
  return BinaryRiordanMatrix(std::move(b));
}

RiordanPair riordan_multiply(const RiordanPair& a, const RiordanPair& b) {
  return RiordanPair{a.g * compose(b.g, a.f), compose(b.f, a.f)};
}

RiordanPair riordan_inverse(const RiordanPair& a) {
  const BitSeries fbar = comp_inverse(a.f);
  return RiordanPair{reciprocal(compose(a.g, fbar)), fbar};
}

RiordanPair flip_transpose(const BitSeries& g, const BitSeries& f, std::size_t n) {
  require(is_proper(g, f), ErrorKind::not_applicable, "flip-transpose needs a proper pair");
  const BitSeries fbar = comp_inverse(f);
  const BitSeries t_over = divide(BitSeries::monomial(1, fbar.trunc()), fbar);
  const BitSeries gt = compose(g, fbar) * derivative(fbar) * power(t_over, n);
  return RiordanPair{gt, fbar};
}

MatrixCensus enumerate_order_n(std::size_t n, Execution exec) {
  require(n >= 1, ErrorKind::domain, "matrix order must be at least 1");
  if (n > kMaxCensusOrder)
    fail(ErrorKind::budget, "order " + std::to_string(n) + " would visit 2^" + std::to_string(2 * n - 1) +
                                " generator pairs; the census is limited to order " +
                                std::to_string(kMaxCensusOrder));
  const std::uint64_t g_count = std::uint64_t{1} << n;
  const std::uint64_t f_count = std::uint64_t{1} << (n - 1);

  // Each generator pair maps to (packed matrix, pair index); duplicates keep
  // the smallest index so the result does not depend on scheduling.
  using Hit = std::pair<std::uint64_t, std::uint64_t>;
  auto pack = [n](const BitMatrix& b) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (b.get(i, j)) key |= std::uint64_t{1} << (i * n + j);
    return key;
  };
  auto visit_g = [&](std::uint64_t gb, std::vector<Hit>& out) {
    const BitSeries g = BitSeries::from_words({gb}, n);
    for (std::uint64_t fb = 0; fb < f_count; ++fb) {
      const BitSeries f = BitSeries::from_words({fb << 1}, n);
      out.emplace_back(pack(riordan_block(g, f, n, n)), gb * f_count + fb);
    }
  };

  std::vector<Hit> hits;
  if (exec == Execution::parallel) {
    std::vector<std::vector<Hit>> parts(g_count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t gb = 0; gb < static_cast<std::int64_t>(g_count); ++gb)
      visit_g(static_cast<std::uint64_t>(gb), parts[static_cast<std::size_t>(gb)]);
    for (auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
  } else {
    for (std::uint64_t gb = 0; gb < g_count; ++gb) visit_g(gb, hits);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.first == b.first; }),
             hits.end());

  MatrixCensus census;
  for (const auto& [key, idx] : hits) {
    const BitSeries g = BitSeries::from_words({idx / f_count}, n);
    const BitSeries f = BitSeries::from_words({(idx % f_count) << 1}, n);
    BinaryRiordanMatrix m = build_matrix(g, f, n);
    if (m.is_proper()) ++census.invertible;
    census.matrices.push_back(std::move(m));
  }
  census.total = census.matrices.size();
  return census;
}

}  // namespace riordan
