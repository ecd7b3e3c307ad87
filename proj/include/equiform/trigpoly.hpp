#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "equiform/rational.hpp"

namespace equiform {

enum class Kind : std::uint8_t { Cos = 0, Sin = 1 };

inline const char* kind_name(Kind kind) {
  return kind == Kind::Cos ? "cos" : "sin";
}

/// Basis function phi^power * cos(freq*phi) (or sin). Canonical keys have
/// power >= 0, freq >= 0 and never (kind == Sin, freq == 0).
struct TrigKey {
  int power = 0;
  int freq = 0;
  Kind kind = Kind::Cos;
  friend auto operator<=>(const TrigKey&, const TrigKey&) = default;
};

/// Lossless read-out of a TrigPoly's canonical term map.
struct CoeffTable {
  std::map<TrigKey, Rational> entries;
  int max_power = 0;
  int max_freq = 0;

  /// Coefficient lookup; absent keys read as zero.
  Rational value(int power, int freq, Kind kind) const;
  bool empty() const { return entries.empty(); }
};

/// Element of the ring spanned by phi^i cos(j phi) and phi^i sin(j phi),
/// i, j >= 0, with exact rational coefficients.
///
/// The representation is canonical: no zero coefficients are stored,
/// sin(0 phi) terms are eliminated on construction, and negative
/// frequencies are normalized (cos is even, sin is odd). Two values are
/// equal iff their term maps are identical. Values are immutable in
/// practice; every operation returns a fresh value, so sharing across
/// threads is safe.
class TrigPoly {
 public:
  TrigPoly() = default;  // the zero element

  static TrigPoly constant(Rational value);
  /// coeff * phi^power * cos/sin(freq * phi), normalized.
  static TrigPoly term(int power, int freq, Kind kind, Rational coeff);
  static TrigPoly phi(int power = 1);
  static TrigPoly cosine(int freq, int power = 0);
  static TrigPoly sine(int freq, int power = 0);

  bool is_zero() const { return terms_.empty(); }
  const std::map<TrigKey, Rational>& terms() const { return terms_; }
  Rational coeff(int power, int freq, Kind kind) const;
  int max_power() const;
  int max_freq() const;
  std::size_t term_count() const { return terms_.size(); }

  TrigPoly operator-() const;
  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) {
    a += b;
    return a;
  }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) {
    a -= b;
    return a;
  }
  /// Product expanded by the product-to-sum identities; result canonical.
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  TrigPoly scaled(const Rational& factor) const;

  /// d/dphi, term by term:
  ///   (phi^i cos j phi)' = i phi^(i-1) cos j phi - j phi^i sin j phi
  /// and the sin analogue.
  TrigPoly diff() const;

  /// Floating-point evaluation; a ring homomorphism up to rounding.
  double eval(double phi) const;

  CoeffTable extract_coeffs() const;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

  std::string str() const;

 private:
  /// Normalizing accumulate: folds sign/frequency conventions and drops
  /// terms whose coefficient cancels to zero.
  void accumulate(int power, int freq, Kind kind, const Rational& coeff);

  std::map<TrigKey, Rational> terms_;
};

}  // namespace equiform
