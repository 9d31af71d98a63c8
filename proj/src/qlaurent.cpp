#include "skewht/qlaurent.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace skewht {

QLaurent::QLaurent(const Rational& c) {
  if (c != 0) terms_.emplace(QExponent{}, c);
}

QLaurent::QLaurent(QExponent mono, Rational c) {
  if (c != 0) {
    std::erase_if(mono, [](const auto& kv) { return kv.second == 0; });
    terms_.emplace(std::move(mono), std::move(c));
  }
}

QLaurent QLaurent::q(int i, int j) {
  if (i < 1 || j < 1) throw std::out_of_range("q_{i,j}: indices must be >= 1");
  if (i == j) return one();
  QExponent m;
  if (i < j)
    m[{i, j}] = 1;
  else
    m[{j, i}] = -1;
  return QLaurent(std::move(m), Rational(1));
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational QLaurent::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw std::domain_error("constant_value: not a constant");
  return terms_.begin()->second;
}

QLaurent QLaurent::inverse() const {
  if (!is_unit())
    throw std::domain_error("QLaurent::inverse: only single-term units are invertible");
  const auto& [mono, c] = *terms_.begin();
  QExponent inv;
  for (const auto& [pr, e] : mono) inv[pr] = -e;
  return QLaurent(std::move(inv), Rational(1) / c);
}

QLaurent QLaurent::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  QLaurent r = one();
  QLaurent base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

void QLaurent::add_term(const QExponent& mono, const Rational& c) {
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      QExponent m = ma;
      for (const auto& [pr, e] : mb) {
        int& slot = m[pr];
        slot += e;
        if (slot == 0) m.erase(pr);
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  *this = *this * o;
  return *this;
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::ostringstream qpart;
    bool qfirst = true;
    for (const auto& [pr, e] : m) {
      if (!qfirst) qpart << "*";
      qfirst = false;
      qpart << "q_{" << pr.first << "," << pr.second << "}";
      if (e != 1) qpart << "^" << e;
    }
    if (m.empty()) {
      out << coeff;
    } else {
      if (coeff != 1) out << coeff << "*";
      out << qpart.str();
    }
  }
  return out.str();
}

QSpecialization QSpecialization::random_prime(int n, std::uint64_t seed,
                                              std::uint64_t p) {
  QSpecialization s(Field::Prime, p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.set_fp(i, j, dist(rng));
  return s;
}

QSpecialization QSpecialization::ones(int n) {
  QSpecialization s(Field::Rationals, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.set_rat(i, j, Rational(1));
  return s;
}

void QSpecialization::set_fp(int i, int j, std::uint64_t v) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("set_fp: need 1 <= i < j");
  if (v % p_ == 0) throw std::invalid_argument("set_fp: value must be nonzero mod p");
  fp_values_[{i, j}] = v % p_;
}

void QSpecialization::set_rat(int i, int j, const Rational& v) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("set_rat: need 1 <= i < j");
  if (v == 0) throw std::invalid_argument("set_rat: value must be nonzero");
  rat_values_[{i, j}] = v;
}

std::uint64_t QSpecialization::fp_value(int i, int j) const {
  if (i == j) return 1;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = fp_values_.find({i, j});
  if (it == fp_values_.end())
    throw std::out_of_range("specialization missing q_{" + std::to_string(i) +
                            "," + std::to_string(j) + "}");
  return flip ? fp::inv(it->second, p_) : it->second;
}

Rational QSpecialization::rat_value(int i, int j) const {
  if (i == j) return Rational(1);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = rat_values_.find({i, j});
  if (it == rat_values_.end())
    throw std::out_of_range("specialization missing q_{" + std::to_string(i) +
                            "," + std::to_string(j) + "}");
  return flip ? Rational(1) / it->second : it->second;
}

std::uint64_t rational_mod(const Rational& r, std::uint64_t p) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(r) % cpp_int(p);
  cpp_int den = denominator(r) % cpp_int(p);
  if (num < 0) num += p;
  if (den == 0) throw std::domain_error("rational_mod: denominator divisible by p");
  auto n64 = static_cast<std::uint64_t>(num);
  auto d64 = static_cast<std::uint64_t>(den);
  return fp::mul(n64, fp::inv(d64, p), p);
}

std::uint64_t QSpecialization::eval_fp(const QLaurent& s) const {
  if (field_ != Field::Prime)
    throw std::logic_error("eval_fp: specialization is not over a prime field");
  std::uint64_t acc = 0;
  for (const auto& [m, c] : s.terms()) {
    std::uint64_t t = rational_mod(c, p_);
    for (const auto& [pr, e] : m)
      t = fp::mul(t, fp::pow_signed(fp_value(pr.first, pr.second), e, p_), p_);
    acc = fp::add(acc, t, p_);
  }
  return acc;
}

Rational QSpecialization::eval_rat(const QLaurent& s) const {
  if (field_ != Field::Rationals)
    throw std::logic_error("eval_rat: specialization is not over the rationals");
  Rational acc(0);
  for (const auto& [m, c] : s.terms()) {
    Rational t = c;
    for (const auto& [pr, e] : m) {
      Rational v = rat_value(pr.first, pr.second);
      Rational pw(1);
      for (int k = 0; k < (e < 0 ? -e : e); ++k) pw *= v;
      if (e < 0) pw = Rational(1) / pw;
      t *= pw;
    }
    acc += t;
  }
  return acc;
}

}  // namespace skewht
