#pragma once

#include <string>
#include <vector>

#include "equiform/trigpoly.hpp"

namespace equiform {

/// Polynomial in t whose coefficients are TrigPoly values in phi.
/// Trailing zero coefficients are stripped, so the highest-index entry is
/// nonzero (an empty sequence is the zero polynomial) and product degrees
/// add exactly.
class TPoly {
 public:
  TPoly() = default;  // zero
  explicit TPoly(TrigPoly constant_coeff);
  static TPoly from_coeffs(std::vector<TrigPoly> coeffs);
  static TPoly constant(Rational value);
  static TPoly t(int power = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in t; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k; indices beyond the degree read as zero.
  const TrigPoly& coeff(int k) const;
  const std::vector<TrigPoly>& coeffs() const { return coeffs_; }

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& other);
  TPoly& operator-=(const TPoly& other);
  friend TPoly operator+(TPoly a, const TPoly& b) {
    a += b;
    return a;
  }
  friend TPoly operator-(TPoly a, const TPoly& b) {
    a -= b;
    return a;
  }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly scaled(const Rational& factor) const;

  TPoly diff_t() const;
  TPoly diff_phi() const;
  /// Exact substitution t = 0.
  const TrigPoly& at_t0() const;
  /// Exact substitution t -> c * t.
  TPoly reparametrize_t(const Rational& c) const;

  double eval(double t, double phi) const;

  friend bool operator==(const TPoly&, const TPoly&) = default;
  std::string str() const;

 private:
  void strip();
  std::vector<TrigPoly> coeffs_;  // coeffs_[k] multiplies t^k
};

}  // namespace equiform
