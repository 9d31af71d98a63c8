#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "skewht/fp.hpp"

namespace skewht {

using Rational = boost::multiprecision::cpp_rational;

// Exponent vector of a q-monomial, keyed by variable pairs (i,j) with i<j.
// q_{j,i} is never stored: it is q_{i,j} with the exponent negated.
using QExponent = std::map<std::pair<int, int>, int>;

/// Laurent polynomial over the rationals in the symbols q_{i,j}, i<j.
/// The zero polynomial has an empty term map; no stored coefficient is zero.
class QLaurent {
 public:
  QLaurent() = default;
  explicit QLaurent(const Rational& c);
  QLaurent(QExponent mono, Rational c);

  static QLaurent zero() { return QLaurent(); }
  static QLaurent one() { return QLaurent(Rational(1)); }
  static QLaurent integer(long long v) { return QLaurent(Rational(v)); }
  /// The generator q_{i,j}; q(i,i) = 1 and q(j,i) = q(i,j)^{-1}.
  static QLaurent q(int i, int j);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the value is a single term c * q^e (invertible element).
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const;
  /// Rational value of a constant (throws otherwise).
  Rational constant_value() const;

  QLaurent inverse() const;       // units only
  QLaurent pow(long long e) const;  // negative e requires a unit

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) {
    return !(a == b);
  }
  friend bool operator<(const QLaurent& a, const QLaurent& b) {
    return a.terms_ < b.terms_;
  }

  const std::map<QExponent, Rational>& terms() const { return terms_; }

  /// Rendering like "-q_{1,2}^-1*q_{3,4} + 2".
  std::string str() const;

 private:
  void add_term(const QExponent& mono, const Rational& c);
  std::map<QExponent, Rational> terms_;
};

/// Assignment of nonzero field values to the q_{i,j}, either in Q or in a
/// prime field F_p. The value of q_{j,i} is the inverse of q_{i,j}.
class QSpecialization {
 public:
  enum class Field { Rationals, Prime };

  QSpecialization() = default;
  QSpecialization(Field f, std::uint64_t p) : field_(f), p_(p) {}

  /// All q_{i,j} for 1 <= i < j <= n drawn uniformly from [1, p-1].
  static QSpecialization random_prime(int n, std::uint64_t seed,
                                      std::uint64_t p = fp::kDefaultPrime);
  /// All q_{i,j} = 1 over the rationals (the commutative degeneration).
  static QSpecialization ones(int n);

  Field field() const { return field_; }
  std::uint64_t prime() const { return p_; }

  void set_fp(int i, int j, std::uint64_t v);
  void set_rat(int i, int j, const Rational& v);

  /// Value of q_{i,j} for arbitrary i != j (inverts stored values on demand).
  std::uint64_t fp_value(int i, int j) const;
  Rational rat_value(int i, int j) const;

  std::uint64_t eval_fp(const QLaurent& s) const;
  Rational eval_rat(const QLaurent& s) const;

  const std::map<std::pair<int, int>, std::uint64_t>& fp_values() const {
    return fp_values_;
  }
  const std::map<std::pair<int, int>, Rational>& rat_values() const {
    return rat_values_;
  }

 private:
  Field field_ = Field::Prime;
  std::uint64_t p_ = fp::kDefaultPrime;
  std::map<std::pair<int, int>, std::uint64_t> fp_values_;
  std::map<std::pair<int, int>, Rational> rat_values_;
};

/// Residue of a rational mod p (denominator must be invertible).
std::uint64_t rational_mod(const Rational& r, std::uint64_t p);

}  // namespace skewht
