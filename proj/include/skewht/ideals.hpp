#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewht/skew_ring.hpp"

namespace skewht {

/// Monomial ideal given by an ordered generator list. The order matters:
/// linear quotients are certified with respect to it.
struct MonomialIdeal {
  SkewContext ctx;
  std::vector<Monomial> gens;

  MonomialIdeal() = default;
  MonomialIdeal(SkewContext c, std::vector<Monomial> g)
      : ctx(std::move(c)), gens(std::move(g)) {}
  size_t size() const { return gens.size(); }
  MonomialIdeal prefix(size_t j) const {
    return MonomialIdeal(ctx, {gens.begin(), gens.begin() + j});
  }
};

/// Unique inclusion-minimal generating subset; survivor order preserved.
std::vector<Monomial> minimize(const std::vector<Monomial>& gens);

/// Membership: true iff some generator divides m.
bool contains(const MonomialIdeal& I, const Monomial& m);

struct ColonResult {
  bool all_variables = false;
  std::vector<int> vars;       // sorted 1-based indices, valid when all_variables
  Monomial offender;           // a non-variable minimal colon generator otherwise
};

/// Minimal generators of ((prefix) : u), reported as a variable index set
/// when the colon ideal is generated by variables.
ColonResult colon_variables(const std::vector<Monomial>& prefix, const Monomial& u);

struct LinearQuotientCert {
  std::vector<std::vector<int>> sets;  // set(u_j) per generator, set(u_1) empty
  bool regular = false;
  // Witness (u, s) violating set(g(x_s*u)) subset-of set(u), when not regular.
  std::optional<std::pair<Monomial, int>> counterexample;

  const std::vector<int>& set_of(size_t j) const { return sets[j]; }  // 0-based
  size_t max_set_size() const;
};

struct LinearQuotientResult {
  std::optional<LinearQuotientCert> cert;
  // On failure: smallest j in [1, m-1] such that (I_j : u_{j+1}) is not
  // variable-generated, together with an offending colon generator.
  int failure_index = 0;
  Monomial offender;
  bool ok() const { return cert.has_value(); }
};

/// Colon sets for the given generator order; fails at the first bad colon.
/// The returned cert has regularity unset; see check_regular / certify.
LinearQuotientResult linear_quotients(const MonomialIdeal& I);

/// Decomposition g(m) = earliest generator whose prefix ideal contains m,
/// and complement kappa with m = g * kappa.
std::pair<Monomial, Monomial> decompose(const MonomialIdeal& I, const Monomial& m);

struct RegularityReport {
  bool regular = false;
  std::optional<std::pair<Monomial, int>> counterexample;  // (u, s)
};

RegularityReport check_regular(const MonomialIdeal& I, const LinearQuotientCert& cert);

/// linear_quotients + check_regular, with the cert's regularity fields filled.
LinearQuotientResult certify(const MonomialIdeal& I);

struct IdealClass {
  bool stable = false;
  bool squarefree_stable = false;
  bool matroidal = false;
};

IdealClass classify(const MonomialIdeal& I);

/// Generators sorted by weighted degree (ascending), ties broken by reverse
/// lexicographic comparison (larger revlex first).
std::vector<Monomial> revlex_order(const SkewContext& ctx, std::vector<Monomial> gens);

/// True when a precedes b in the revlex_order.
bool revlex_less(const SkewContext& ctx, const Monomial& a, const Monomial& b);

/// Brute-force search for a generator order with linear quotients; guarded
/// to at most 8 generators. Returns a reordered generator list on success.
std::optional<std::vector<Monomial>> search_linear_quotient_order(const MonomialIdeal& I);

}  // namespace skewht
