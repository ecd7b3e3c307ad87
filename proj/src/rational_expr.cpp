#include "equiform/rational_expr.hpp"

namespace equiform {

RationalExpr::RationalExpr(TPoly num, TPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw ZeroDenominator("rational expression with zero denominator");
  }
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr result;
  result.num_ = -num_;
  result.den_ = den_;
  return result;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.den_ == b.den_) {
    return RationalExpr(a.num_ + b.num_, a.den_);
  }
  return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
  if (a.den_ == b.den_) {
    return RationalExpr(a.num_ - b.num_, a.den_);
  }
  return RationalExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr RationalExpr::scaled(const Rational& factor) const {
  RationalExpr result;
  result.num_ = num_.scaled(factor);
  result.den_ = den_;
  return result;
}

RationalExpr RationalExpr::diff_t() const {
  return RationalExpr(num_.diff_t() * den_ - num_ * den_.diff_t(), den_ * den_);
}

RationalExpr RationalExpr::diff_phi() const {
  return RationalExpr(num_.diff_phi() * den_ - num_ * den_.diff_phi(),
                      den_ * den_);
}

bool RationalExpr::equals(const RationalExpr& other) const {
  return (num_ * other.den_ - other.num_ * den_).is_zero();
}

double RationalExpr::eval(double t, double phi) const {
  return num_.eval(t, phi) / den_.eval(t, phi);
}

}  // namespace equiform
