#include "equiform/trigpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace equiform {

Rational CoeffTable::value(int power, int freq, Kind kind) const {
  auto it = entries.find(TrigKey{power, freq, kind});
  if (it == entries.end()) return Rational(0);
  return it->second;
}

TrigPoly TrigPoly::constant(Rational value) {
  return term(0, 0, Kind::Cos, std::move(value));
}

TrigPoly TrigPoly::term(int power, int freq, Kind kind, Rational coeff) {
  if (power < 0) throw std::invalid_argument("negative phi power");
  TrigPoly result;
  result.accumulate(power, freq, kind, coeff);
  return result;
}

TrigPoly TrigPoly::phi(int power) { return term(power, 0, Kind::Cos, 1); }

TrigPoly TrigPoly::cosine(int freq, int power) {
  return term(power, freq, Kind::Cos, 1);
}

TrigPoly TrigPoly::sine(int freq, int power) {
  return term(power, freq, Kind::Sin, 1);
}

Rational TrigPoly::coeff(int power, int freq, Kind kind) const {
  auto it = terms_.find(TrigKey{power, freq, kind});
  if (it == terms_.end()) return Rational(0);
  return it->second;
}

int TrigPoly::max_power() const {
  int result = 0;
  for (const auto& [key, value] : terms_) result = std::max(result, key.power);
  return result;
}

int TrigPoly::max_freq() const {
  int result = 0;
  for (const auto& [key, value] : terms_) result = std::max(result, key.freq);
  return result;
}

void TrigPoly::accumulate(int power, int freq, Kind kind, const Rational& coeff) {
  if (equiform::is_zero(coeff)) return;
  Rational c = coeff;
  if (freq < 0) {
    freq = -freq;
    if (kind == Kind::Sin) c = -c;
  }
  if (kind == Kind::Sin && freq == 0) return;  // sin(0 phi) == 0

  TrigKey key{power, freq, kind};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (equiform::is_zero(it->second)) terms_.erase(it);
  }
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly result;
  for (const auto& [key, value] : terms_) {
    result.terms_.emplace(key, -value);
  }
  return result;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  for (const auto& [key, value] : other.terms_) {
    accumulate(key.power, key.freq, key.kind, value);
  }
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  for (const auto& [key, value] : other.terms_) {
    Rational negated = -value;
    accumulate(key.power, key.freq, key.kind, negated);
  }
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly result;
  Rational product, half;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      product = ca * cb;
      half = product / 2;
      int power = ka.power + kb.power;
      int sum = ka.freq + kb.freq;

      if (ka.kind == Kind::Cos && kb.kind == Kind::Cos) {
        // cos A cos B = 1/2 [cos(A-B) + cos(A+B)]
        result.accumulate(power, ka.freq - kb.freq, Kind::Cos, half);
        result.accumulate(power, sum, Kind::Cos, half);
      } else if (ka.kind == Kind::Sin && kb.kind == Kind::Sin) {
        // sin A sin B = 1/2 [cos(A-B) - cos(A+B)]
        Rational neg = -half;
        result.accumulate(power, ka.freq - kb.freq, Kind::Cos, half);
        result.accumulate(power, sum, Kind::Cos, neg);
      } else if (ka.kind == Kind::Sin && kb.kind == Kind::Cos) {
        // sin A cos B = 1/2 [sin(A-B) + sin(A+B)]
        result.accumulate(power, ka.freq - kb.freq, Kind::Sin, half);
        result.accumulate(power, sum, Kind::Sin, half);
      } else {
        // cos A sin B = 1/2 [sin(B-A) + sin(B+A)]
        result.accumulate(power, kb.freq - ka.freq, Kind::Sin, half);
        result.accumulate(power, sum, Kind::Sin, half);
      }
    }
  }
  return result;
}

TrigPoly TrigPoly::scaled(const Rational& factor) const {
  TrigPoly result;
  if (equiform::is_zero(factor)) return result;
  for (const auto& [key, value] : terms_) {
    result.terms_.emplace(key, value * factor);
  }
  return result;
}

TrigPoly TrigPoly::diff() const {
  TrigPoly result;
  for (const auto& [key, value] : terms_) {
    if (key.power > 0) {
      Rational c = value * key.power;
      result.accumulate(key.power - 1, key.freq, key.kind, c);
    }
    if (key.freq > 0) {
      Rational c = value * key.freq;
      if (key.kind == Kind::Cos) {
        c = -c;
        result.accumulate(key.power, key.freq, Kind::Sin, c);
      } else {
        result.accumulate(key.power, key.freq, Kind::Cos, c);
      }
    }
  }
  return result;
}

double TrigPoly::eval(double phi) const {
  double total = 0.0;
  for (const auto& [key, value] : terms_) {
    double monomial = 1.0;
    for (int i = 0; i < key.power; ++i) monomial *= phi;
    double angle = static_cast<double>(key.freq) * phi;
    double wave = key.kind == Kind::Cos ? std::cos(angle) : std::sin(angle);
    total += to_double(value) * monomial * wave;
  }
  return total;
}

CoeffTable TrigPoly::extract_coeffs() const {
  CoeffTable table;
  table.entries = terms_;
  table.max_power = max_power();
  table.max_freq = max_freq();
  return table;
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(value) << ")";
    if (key.power > 0) out << "*phi^" << key.power;
    if (key.freq > 0) out << "*" << kind_name(key.kind) << "(" << key.freq << "p)";
  }
  return out.str();
}

}  // namespace equiform
