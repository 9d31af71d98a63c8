#pragma once

#include <map>
#include <string>
#include <utility>

#include "skewht/ideals.hpp"

namespace skewht {

/// Polynomial in s (homological degree) and t (Z-degree) with integer
/// coefficients.
struct BivariatePoly {
  std::map<std::pair<int, int>, long long> coeffs;  // (s-exp, t-exp) -> coeff

  void add(int se, int te, long long c);
  long long coeff(int se, int te) const;
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.coeffs == b.coeffs;
  }
  std::string str() const;
};

struct PoincareSeries {
  BivariatePoly poly;
  // Number of monomials produced by the expansion before collection,
  // counted with multiplicity.
  long long occurrences = 0;
};

/// Bigraded Poincare series of R/I:
/// P(s,t) = 1 + sum over generators u of (1+s)^|set u| s t^deg(u).
PoincareSeries poincare_series(const MonomialIdeal& I, const LinearQuotientCert& cert);

/// i-th Betti number of I: sum over generators of binom(|set u|, i).
long long betti_numbers(const MonomialIdeal& I, const LinearQuotientCert& cert, int i);

/// All nonzero Betti numbers of I, indices 0..max set size.
std::vector<long long> betti_vector(const MonomialIdeal& I,
                                    const LinearQuotientCert& cert);

/// pd_R R/I = 1 + max |set u|.
int projective_dimension(const MonomialIdeal& I, const LinearQuotientCert& cert);

/// Tor-regularity of I = max Z-degree of a minimal generator; equals the
/// Castelnuovo-Mumford regularity over the skew ring.
int regularity(const MonomialIdeal& I, const LinearQuotientCert& cert);

long long binomial(long long n, long long k);

}  // namespace skewht
