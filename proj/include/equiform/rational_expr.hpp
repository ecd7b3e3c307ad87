#pragma once

#include "equiform/errors.hpp"
#include "equiform/tpoly.hpp"

namespace equiform {

/// Quotient of two TPoly values. No gcd cancellation is ever attempted:
/// zero-testing reduces to the numerator and equality is decided by
/// cross-multiplication (a/b == c/d iff a*d - c*b == 0). Denominators of
/// sums and products therefore grow by construction order, which stays
/// bounded in this pipeline because sums share denominators structurally.
class RationalExpr {
 public:
  RationalExpr() : num_(), den_(TPoly::constant(1)) {}
  explicit RationalExpr(TPoly num) : num_(std::move(num)), den_(TPoly::constant(1)) {}
  RationalExpr(TPoly num, TPoly den);

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalExpr operator-() const;
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  RationalExpr scaled(const Rational& factor) const;

  /// Quotient rule: (n/d)' = (n' d - n d') / d^2.
  RationalExpr diff_t() const;
  RationalExpr diff_phi() const;

  /// Cross-multiplied equality.
  bool equals(const RationalExpr& other) const;

  /// No singularity guard; callers check the denominator themselves.
  double eval(double t, double phi) const;

 private:
  TPoly num_, den_;
};

}  // namespace equiform
