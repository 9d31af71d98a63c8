#include "skewht/skew_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewht {

void SkewContext::validate() const {
  if (n < 1) throw std::invalid_argument("SkewContext: need n >= 1");
  if (static_cast<int>(degrees.size()) != n)
    throw std::invalid_argument("SkewContext: degrees size must equal n");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("SkewContext: degrees must be >= 1");
}

Monomial Monomial::variable(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
  Monomial m = unit(n);
  m.e[static_cast<size_t>(i) - 1] = 1;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::is_nonnegative() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0 || x == 1; });
}

int Monomial::total_degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

int Monomial::zdegree(const SkewContext& ctx) const {
  int d = 0;
  for (int i = 0; i < n(); ++i) d += e[i] * ctx.degrees[i];
  return d;
}

namespace {
void check_same_n(const Monomial& a, const Monomial& b, const char* who) {
  if (a.n() != b.n())
    throw std::invalid_argument(std::string(who) + ": mismatched variable counts");
}
}  // namespace

Monomial star(const Monomial& a, const Monomial& b) {
  check_same_n(a, b, "star");
  Monomial r = a;
  for (int i = 0; i < b.n(); ++i) r.e[i] += b.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_n(a, b, "lcm");
  Monomial r = a;
  for (int i = 0; i < b.n(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_n(a, b, "gcd");
  Monomial r = a;
  for (int i = 0; i < b.n(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
  return r;
}

bool divides(const Monomial& d, const Monomial& m) {
  check_same_n(d, m, "divides");
  for (int i = 0; i < d.n(); ++i)
    if (d.e[i] > m.e[i]) return false;
  return true;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a))
    throw std::domain_error("quotient: " + monomial_str(b) +
                            " does not divide " + monomial_str(a));
  return difference(a, b);
}

Monomial difference(const Monomial& a, const Monomial& b) {
  check_same_n(a, b, "difference");
  Monomial r = a;
  for (int i = 0; i < b.n(); ++i) r.e[i] -= b.e[i];
  return r;
}

std::vector<int> support(const Monomial& m) {
  std::vector<int> s;
  for (int i = 0; i < m.n(); ++i)
    if (m.e[i] != 0) s.push_back(i + 1);
  return s;
}

int max_index(const Monomial& m) {
  for (int i = m.n(); i >= 1; --i)
    if (m[i] != 0) return i;
  return 0;
}

int min_index(const Monomial& m) {
  for (int i = 1; i <= m.n(); ++i)
    if (m[i] != 0) return i;
  return 0;
}

Monomial variable_product(const std::vector<int>& sigma, int n) {
  Monomial m = Monomial::unit(n);
  for (int i : sigma) {
    if (i < 1 || i > n) throw std::out_of_range("variable_product: index out of range");
    m.e[static_cast<size_t>(i) - 1] += 1;
  }
  return m;
}

QLaurent bichar_C(const Monomial& a, const Monomial& b) {
  check_same_n(a, b, "bichar_C");
  QExponent m;
  // C(x^a, x^b) = prod_{i>j} q_{i,j}^{a_i b_j}; canonically q_{j,i}^{-a_i b_j}.
  for (int i = 2; i <= a.n(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 1; j < i; ++j) {
      if (b[j] == 0) continue;
      int& slot = m[{j, i}];
      slot -= a[i] * b[j];
      if (slot == 0) m.erase({j, i});
    }
  }
  return QLaurent(std::move(m), Rational(1));
}

QLaurent bichar_chi(const Monomial& a, const Monomial& b) {
  return bichar_C(a, b) * bichar_C(b, a).inverse();
}

std::uint64_t bichar_C_fp(const Monomial& a, const Monomial& b,
                          const QSpecialization& spec) {
  check_same_n(a, b, "bichar_C_fp");
  const std::uint64_t p = spec.prime();
  std::uint64_t r = 1;
  for (int i = 2; i <= a.n(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 1; j < i; ++j) {
      if (b[j] == 0) continue;
      long long e = -static_cast<long long>(a[i]) * b[j];
      r = fp::mul(r, fp::pow_signed(spec.fp_value(j, i), e, p), p);
    }
  }
  return r;
}

RingElement::RingElement(const Monomial& m, const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

QLaurent RingElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QLaurent::zero() : it->second;
}

void RingElement::add_term(const Monomial& m, const QLaurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RingElement RingElement::operator-() const {
  RingElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term(star(ma, mb), ca * cb * bichar_C(ma, mb));
  return r;
}

RingElement RingElement::scaled(const QLaurent& c) const {
  RingElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, cm] : terms_) r.add_term(m, cm * c);
  return r;
}

RingElement left_action(const RingElement& r, const RingElement& m) {
  RingElement out;
  for (const auto& [mr, cr] : r.terms())
    for (const auto& [mm, cm] : m.terms()) {
      RingElement prod = RingElement(mm, cm) * RingElement(mr, cr);
      out += prod.scaled(bichar_chi(mr, mm));
    }
  return out;
}

QLaurent q_unit(int i, int j, const SkewContext& ctx) {
  if (i < 1 || i > ctx.n || j < 1 || j > ctx.n)
    throw std::out_of_range("q_unit: variable index out of range");
  return QLaurent::q(i, j);
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_unit();
    if (first) {
      if (neg) {
        out << "-";
        cs = cs.substr(1);
      }
    } else {
      out << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    bool needs_parens = !c.is_unit();
    std::string ms = monomial_str(m);
    if (cs == "1" && ms != "1") {
      out << ms;
    } else if (needs_parens) {
      out << "(" << cs << ")" << (ms == "1" ? "" : "*" + ms);
    } else {
      out << cs << (ms == "1" ? "" : "*" + ms);
    }
  }
  return out.str();
}

namespace {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg, size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + msg) {}
};

}  // namespace

Monomial parse_monomial(const std::string& text, const SkewContext& ctx) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

  Monomial m = Monomial::unit(ctx.n);
  if (s == "1") return m;
  if (s.empty()) throw ParseError("empty monomial", 0);

  size_t pos = 0;
  auto read_int = [&](const char* what) -> long {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    long v = 0;
    for (size_t k = start; k < pos; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
    }
    return v;
  };

  while (true) {
    if (pos >= s.size() || s[pos] != 'x')
      throw ParseError("expected 'x'", pos);
    ++pos;
    long idx = read_int("variable index");
    if (idx < 1 || idx > ctx.n)
      throw ParseError("variable index out of range (n=" + std::to_string(ctx.n) + ")",
                       pos);
    long exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      if (pos < s.size() && s[pos] == '-')
        throw ParseError("negative exponent", pos);
      exp = read_int("exponent");
    }
    m.e[static_cast<size_t>(idx) - 1] += static_cast<int>(exp);
    if (pos == s.size()) break;
    if (s[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
  }
  return m;
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= m.n(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << "x" << i;
    if (m[i] != 1) out << "^" << m[i];
  }
  if (first) return "1";
  return out.str();
}

}  // namespace skewht
