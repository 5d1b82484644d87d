#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "riordan/bit_series.hpp"

namespace riordan {

// Expression over GF(2)[[t]] with an optional unknown X; used by fixed
// point specs and to parse polynomial and rational literals.
struct Expr {
  enum class Kind { constant, t, var, add, mul, pow };
  Kind kind = Kind::constant;
  bool bit = false;        // constant value mod 2
  std::size_t exponent = 0;
  std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view text, bool allow_var);
std::string expr_to_string(const Expr& e);
bool expr_uses_var(const Expr& e);
std::size_t expr_degree(const Expr& e);  // only for X-free expressions

enum class NamedSeries { catalan, motzkin, pascal_g, pascal_f, fibonacci_f, geometric, zero, one, t };

std::string_view to_string(NamedSeries id);

class SeriesSpec {
 public:
  struct Polynomial {
    std::vector<std::size_t> support;  // sorted, distinct
  };
  struct Rational {
    Polynomial num, den;
  };
  struct Named {
    NamedSeries id;
  };
  struct FixedPoint {
    ExprPtr phi;
  };
  // A coefficient window known only up to its truncation; produced by
  // operations whose result has no closed form here.
  struct Window {
    BitSeries coeffs;
  };
  using Variant = std::variant<Polynomial, Rational, Named, FixedPoint, Window>;

  SeriesSpec() : v_(Polynomial{}) {}
  explicit SeriesSpec(Variant v);

  static SeriesSpec parse(std::string_view text);
  static SeriesSpec polynomial(std::vector<std::size_t> support);
  static SeriesSpec rational(std::vector<std::size_t> num, std::vector<std::size_t> den);
  static SeriesSpec named(NamedSeries id) { return SeriesSpec(Named{id}); }
  static SeriesSpec fixed_point(std::string_view phi);
  static SeriesSpec window(BitSeries coeffs) { return SeriesSpec(Window{std::move(coeffs)}); }

  const Variant& variant() const noexcept { return v_; }

  // Largest truncation this spec can be expanded to.
  std::size_t available() const noexcept;

  BitSeries expand(std::size_t trunc) const;

  std::string to_string() const;

 private:
  Variant v_;
};

inline BitSeries expand_spec(const SeriesSpec& spec, std::size_t trunc) { return spec.expand(trunc); }

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

}  // namespace riordan
