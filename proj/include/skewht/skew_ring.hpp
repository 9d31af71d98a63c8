#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewht/qlaurent.hpp"

namespace skewht {

/// Ambient skew polynomial ring: n variables x_1..x_n with positive
/// Z-degrees and relations x_i x_j = q_{i,j} x_j x_i.
struct SkewContext {
  int n = 0;
  std::vector<int> degrees;  // size n, all >= 1

  SkewContext() = default;
  explicit SkewContext(int n_) : n(n_), degrees(n_, 1) { validate(); }
  SkewContext(int n_, std::vector<int> d) : n(n_), degrees(std::move(d)) {
    validate();
  }
  void validate() const;
};

/// Exponent vector. Ring monomials live in N^n; Z^n entries are permitted
/// only as arguments to the extended bicharacters.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  static Monomial unit(int n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(int i, int n);  // x_i, 1-based

  int n() const { return static_cast<int>(e.size()); }
  int operator[](int i) const { return e[static_cast<size_t>(i) - 1]; }  // 1-based
  bool is_unit() const;
  bool is_nonnegative() const;
  bool is_squarefree() const;
  int total_degree() const;                    // sum of exponents
  int zdegree(const SkewContext& ctx) const;   // weighted by ctx.degrees

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

Monomial star(const Monomial& a, const Monomial& b);      // exponent sum
Monomial lcm(const Monomial& a, const Monomial& b);       // componentwise max
Monomial gcd(const Monomial& a, const Monomial& b);       // componentwise min
bool divides(const Monomial& d, const Monomial& m);       // d | m
Monomial quotient(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial difference(const Monomial& a, const Monomial& b);  // a - b in Z^n

std::vector<int> support(const Monomial& m);  // 1-based indices of nonzero exps
int max_index(const Monomial& m);             // largest index in support, 0 if unit
int min_index(const Monomial& m);             // smallest index in support, 0 if unit

/// Product of the variables x_i, i in sigma (1-based indices).
Monomial variable_product(const std::vector<int>& sigma, int n);

/// The bicharacter C with x^a x^b = C(a,b) x^(a+b), extended to Z^n.
/// Closed form: product over i>j of q_{i,j}^(a_i b_j).
QLaurent bichar_C(const Monomial& a, const Monomial& b);

/// The alternating bicharacter chi = C(a,b)/C(b,a); chi(x_i,x_j) = q_{i,j}.
QLaurent bichar_chi(const Monomial& a, const Monomial& b);

/// C and chi evaluated directly in F_p under a prime-field specialization.
std::uint64_t bichar_C_fp(const Monomial& a, const Monomial& b,
                          const QSpecialization& spec);

/// Finite k_q-linear combination of monomials. Multiplication follows
/// x^a x^b = C(a,b) x^(a+b); scalars commute with everything.
class RingElement {
 public:
  RingElement() = default;
  RingElement(const Monomial& m, const QLaurent& c);

  static RingElement zero() { return RingElement(); }
  static RingElement monomial(const Monomial& m) {
    return RingElement(m, QLaurent::one());
  }

  bool is_zero() const { return terms_.empty(); }
  /// Single term c * x^m with invertible coefficient.
  bool is_term() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  const std::map<Monomial, QLaurent>& terms() const { return terms_; }
  /// Coefficient of x^m (zero polynomial if absent).
  QLaurent coeff(const Monomial& m) const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement scaled(const QLaurent& c) const;
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RingElement& a, const RingElement& b) {
    return !(a == b);
  }

  std::string str() const;

  void add_term(const Monomial& m, const QLaurent& c);

 private:
  std::map<Monomial, QLaurent> terms_;
};

/// Left action r . m = chi(r, m) m r on right-module elements, extended
/// bilinearly from homogeneous pieces.
RingElement left_action(const RingElement& r, const RingElement& m);

/// q_{i,j} with the context's range check.
QLaurent q_unit(int i, int j, const SkewContext& ctx);

/// Grammar: mono := term ('*' term)* | "1"; term := 'x' INT ('^' INT)?.
/// Whitespace is ignored; indices are 1-based; exponents nonnegative.
Monomial parse_monomial(const std::string& text, const SkewContext& ctx);

std::string monomial_str(const Monomial& m);

}  // namespace skewht
