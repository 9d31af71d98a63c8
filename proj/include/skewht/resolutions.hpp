#pragma once

#include <vector>

#include "skewht/complexes.hpp"

namespace skewht {

/// Taylor resolution of (gens) twisted by the monomial u: basis e(sigma;u)
/// over subsets of the generator positions, multidegree lcm(sigma) * u.
/// Optional names relabel positions (strictly increasing), so that a
/// complex built on variables x_{k_1} < ... < x_{k_l} carries the variable
/// indices in its labels.
FreeComplex twisted_taylor(const SkewContext& ctx,
                           const std::vector<Monomial>& gens, const Monomial& u,
                           std::vector<int> names = {});

/// Untwisted skew Taylor resolution (twist by 1).
FreeComplex taylor(const SkewContext& ctx, const std::vector<Monomial>& gens);

/// Skew Koszul complex on the given monomials; multidegree of e_sigma is
/// the star-product of its monomials.
FreeComplex koszul(const SkewContext& ctx, const std::vector<Monomial>& gens,
                   std::vector<int> names = {});

/// Isomorphism phi: Taylor -> twisted Taylor, e_sigma -> e(sigma;u) C(u, m_sigma).
ChainMap iso_taylor_twist(const SkewContext& ctx,
                          const std::vector<Monomial>& gens, const Monomial& u);

/// Isomorphism psi: Taylor -> Koszul for generators with pairwise disjoint
/// supports; rejects overlapping supports.
ChainMap iso_taylor_koszul(const SkewContext& ctx,
                           const std::vector<Monomial>& gens);

/// Inverse of a degreewise-diagonal chain map with unit entries.
ChainMap invert_diagonal(const ChainMap& f);

/// Minimal free resolution of R/I for a regular linear-quotient certificate.
/// Basis e(sigma;u) with sigma inside set(u); the zero convention drops
/// second-sum terms whose relabeled sigma leaves set(g(x_t*u)).
FreeComplex herzog_takayama(const MonomialIdeal& I, const LinearQuotientCert& cert);

/// The explicit lifting of R/L_j -> R/I_j carried by the twisted Taylor
/// complex on the colon variables; its mapping cone is the next Herzog-
/// Takayama stage. j counts the generators of the target prefix, 1 <= j < m.
ChainMap ht_lifting(const MonomialIdeal& I, const LinearQuotientCert& cert, int j);

/// Iterated-mapping-cone resolution over a prime-field specialization; the
/// liftings are found degree by degree by solving inside each multigraded
/// strand. Works for any linear-quotient certificate, regular or not.
FpComplex cone_resolution(const MonomialIdeal& I, const LinearQuotientCert& cert,
                          const QSpecialization& spec);

}  // namespace skewht
