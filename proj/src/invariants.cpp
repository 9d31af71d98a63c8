#include "skewht/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewht {

void BivariatePoly::add(int se, int te, long long c) {
  if (c == 0) return;
  auto it = coeffs.find({se, te});
  if (it == coeffs.end()) {
    coeffs.emplace(std::make_pair(se, te), c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

long long BivariatePoly::coeff(int se, int te) const {
  auto it = coeffs.find({se, te});
  return it == coeffs.end() ? 0 : it->second;
}

std::string BivariatePoly::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [st, c] : coeffs) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    auto [se, te] = st;
    bool wrote = false;
    if (a != 1 || (se == 0 && te == 0)) {
      out << a;
      wrote = true;
    }
    if (se > 0) {
      if (wrote) out << "*";
      out << "s";
      if (se > 1) out << "^" << se;
      wrote = true;
    }
    if (te > 0) {
      if (wrote) out << "*";
      out << "t";
      if (te > 1) out << "^" << te;
    }
  }
  return out.str();
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void check_cert(const MonomialIdeal& I, const LinearQuotientCert& cert) {
  if (cert.sets.size() != I.gens.size())
    throw std::invalid_argument("invariants: certificate size mismatch");
}

}  // namespace

PoincareSeries poincare_series(const MonomialIdeal& I,
                               const LinearQuotientCert& cert) {
  check_cert(I, cert);
  PoincareSeries P;
  P.poly.add(0, 0, 1);
  P.occurrences = 1;
  for (size_t j = 0; j < I.gens.size(); ++j) {
    long long k = static_cast<long long>(cert.sets[j].size());
    int d = I.gens[j].zdegree(I.ctx);
    for (long long i = 0; i <= k; ++i) {
      long long c = binomial(k, i);
      P.poly.add(static_cast<int>(i) + 1, d, c);
      P.occurrences += c;
    }
  }
  return P;
}

long long betti_numbers(const MonomialIdeal& I, const LinearQuotientCert& cert,
                        int i) {
  check_cert(I, cert);
  long long b = 0;
  for (const auto& s : cert.sets)
    b += binomial(static_cast<long long>(s.size()), i);
  return b;
}

std::vector<long long> betti_vector(const MonomialIdeal& I,
                                    const LinearQuotientCert& cert) {
  std::vector<long long> out;
  for (int i = 0; i <= static_cast<int>(cert.max_set_size()); ++i)
    out.push_back(betti_numbers(I, cert, i));
  return out;
}

int projective_dimension(const MonomialIdeal& I, const LinearQuotientCert& cert) {
  check_cert(I, cert);
  return 1 + static_cast<int>(cert.max_set_size());
}

int regularity(const MonomialIdeal& I, const LinearQuotientCert& cert) {
  check_cert(I, cert);
  int r = 0;
  for (const Monomial& u : I.gens) r = std::max(r, u.zdegree(I.ctx));
  return r;
}

}  // namespace skewht
