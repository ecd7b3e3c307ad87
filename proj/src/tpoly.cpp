#include "equiform/tpoly.hpp"

#include <sstream>

namespace equiform {

namespace {
const TrigPoly kZero{};
}

TPoly::TPoly(TrigPoly constant_coeff) {
  coeffs_.push_back(std::move(constant_coeff));
  strip();
}

TPoly TPoly::from_coeffs(std::vector<TrigPoly> coeffs) {
  TPoly result;
  result.coeffs_ = std::move(coeffs);
  result.strip();
  return result;
}

TPoly TPoly::constant(Rational value) {
  return TPoly(TrigPoly::constant(std::move(value)));
}

TPoly TPoly::t(int power) {
  std::vector<TrigPoly> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = TrigPoly::constant(1);
  return from_coeffs(std::move(coeffs));
}

const TrigPoly& TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void TPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly TPoly::operator-() const {
  TPoly result;
  result.coeffs_.reserve(coeffs_.size());
  for (const TrigPoly& c : coeffs_) result.coeffs_.push_back(-c);
  return result;
}

TPoly& TPoly::operator+=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] += other.coeffs_[k];
  }
  strip();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] -= other.coeffs_[k];
  }
  strip();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly{};
  std::vector<TrigPoly> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TPoly::from_coeffs(std::move(coeffs));
}

TPoly TPoly::scaled(const Rational& factor) const {
  TPoly result;
  result.coeffs_.reserve(coeffs_.size());
  for (const TrigPoly& c : coeffs_) result.coeffs_.push_back(c.scaled(factor));
  result.strip();
  return result;
}

TPoly TPoly::diff_t() const {
  TPoly result;
  if (coeffs_.size() <= 1) return result;
  result.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    result.coeffs_.push_back(coeffs_[k].scaled(Rational(static_cast<long>(k))));
  }
  result.strip();
  return result;
}

TPoly TPoly::diff_phi() const {
  TPoly result;
  result.coeffs_.reserve(coeffs_.size());
  for (const TrigPoly& c : coeffs_) result.coeffs_.push_back(c.diff());
  result.strip();
  return result;
}

const TrigPoly& TPoly::at_t0() const { return coeff(0); }

TPoly TPoly::reparametrize_t(const Rational& c) const {
  TPoly result;
  result.coeffs_.reserve(coeffs_.size());
  Rational factor(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    result.coeffs_.push_back(coeffs_[k].scaled(factor));
    factor *= c;
  }
  result.strip();
  return result;
}

double TPoly::eval(double t, double phi) const {
  double total = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    total = total * t + coeffs_[k].eval(phi);
  }
  return total;
}

std::string TPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out << " + ";
    out << "[" << coeffs_[k].str() << "]";
    if (k == 1) out << "*t";
    if (k > 1) out << "*t^" << k;
  }
  return out.str();
}

}  // namespace equiform
