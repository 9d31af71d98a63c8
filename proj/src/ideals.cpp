#include "skewht/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewht {

std::vector<Monomial> minimize(const std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (size_t k = 0; k < gens.size(); ++k) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j == k) continue;
      if (!divides(gens[j], gens[k])) continue;
      // Proper divisor kills k; among duplicates keep the first occurrence.
      if (gens[j] != gens[k] || j < k) redundant = true;
    }
    if (!redundant) out.push_back(gens[k]);
  }
  return out;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  return std::any_of(I.gens.begin(), I.gens.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

ColonResult colon_variables(const std::vector<Monomial>& prefix, const Monomial& u) {
  if (prefix.empty())
    throw std::invalid_argument("colon_variables: prefix must be nonempty");
  std::vector<Monomial> colon_gens;
  colon_gens.reserve(prefix.size());
  for (const Monomial& g : prefix)
    colon_gens.push_back(quotient(g, gcd(g, u)));
  colon_gens = minimize(colon_gens);

  ColonResult r;
  std::vector<int> vars;
  for (const Monomial& c : colon_gens) {
    if (c.total_degree() != 1) {
      r.all_variables = false;
      r.offender = c;
      return r;
    }
    vars.push_back(max_index(c));
  }
  std::sort(vars.begin(), vars.end());
  r.all_variables = true;
  r.vars = std::move(vars);
  return r;
}

size_t LinearQuotientCert::max_set_size() const {
  size_t m = 0;
  for (const auto& s : sets) m = std::max(m, s.size());
  return m;
}

LinearQuotientResult linear_quotients(const MonomialIdeal& I) {
  if (I.gens.empty())
    throw std::invalid_argument("linear_quotients: empty generator list");
  LinearQuotientResult res;
  LinearQuotientCert cert;
  cert.sets.resize(I.gens.size());
  for (size_t j = 1; j < I.gens.size(); ++j) {
    std::vector<Monomial> prefix(I.gens.begin(), I.gens.begin() + j);
    ColonResult c = colon_variables(prefix, I.gens[j]);
    if (!c.all_variables) {
      res.failure_index = static_cast<int>(j);
      res.offender = c.offender;
      return res;
    }
    cert.sets[j] = c.vars;
  }
  res.cert = std::move(cert);
  return res;
}

std::pair<Monomial, Monomial> decompose(const MonomialIdeal& I, const Monomial& m) {
  for (const Monomial& g : I.gens)
    if (divides(g, m)) return {g, quotient(m, g)};
  throw std::domain_error("decompose: " + monomial_str(m) + " is not in the ideal");
}

namespace {

// set(u_j) lookup by generator; decompose always returns a generator.
const std::vector<int>& set_of_generator(const MonomialIdeal& I,
                                         const LinearQuotientCert& cert,
                                         const Monomial& g) {
  for (size_t j = 0; j < I.gens.size(); ++j)
    if (I.gens[j] == g) return cert.sets[j];
  throw std::logic_error("set_of_generator: not a minimal generator");
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

RegularityReport check_regular(const MonomialIdeal& I, const LinearQuotientCert& cert) {
  RegularityReport rep;
  for (size_t j = 0; j < I.gens.size(); ++j) {
    const Monomial& u = I.gens[j];
    for (int s : cert.sets[j]) {
      Monomial xs_u = star(Monomial::variable(s, I.ctx.n), u);
      auto [g, kappa] = decompose(I, xs_u);
      (void)kappa;
      if (!subset_of(set_of_generator(I, cert, g), cert.sets[j])) {
        rep.regular = false;
        rep.counterexample = {u, s};
        return rep;
      }
    }
  }
  rep.regular = true;
  return rep;
}

LinearQuotientResult certify(const MonomialIdeal& I) {
  LinearQuotientResult res = linear_quotients(I);
  if (!res.ok()) return res;
  RegularityReport rep = check_regular(I, *res.cert);
  res.cert->regular = rep.regular;
  res.cert->counterexample = rep.counterexample;
  return res;
}

IdealClass classify(const MonomialIdeal& I) {
  IdealClass cls;
  const int n = I.ctx.n;
  bool squarefree = std::all_of(I.gens.begin(), I.gens.end(),
                                [](const Monomial& g) { return g.is_squarefree(); });

  // stable: x_i * u / x_{max u} in I for every generator u and i < max u.
  cls.stable = true;
  for (const Monomial& u : I.gens) {
    int mx = max_index(u);
    for (int i = 1; i < mx && cls.stable; ++i) {
      Monomial shifted =
          quotient(star(Monomial::variable(i, n), u), Monomial::variable(mx, n));
      if (!contains(I, shifted)) cls.stable = false;
    }
    if (!cls.stable) break;
  }

  cls.squarefree_stable = squarefree;
  if (squarefree) {
    for (const Monomial& u : I.gens) {
      int mx = max_index(u);
      for (int i = 1; i < mx && cls.squarefree_stable; ++i) {
        if (u[i] != 0) continue;  // only i outside the support
        Monomial shifted =
            quotient(star(Monomial::variable(i, n), u), Monomial::variable(mx, n));
        if (!contains(I, shifted)) cls.squarefree_stable = false;
      }
      if (!cls.squarefree_stable) break;
    }
  }

  bool equigenerated = true;
  for (const Monomial& g : I.gens)
    if (g.total_degree() != I.gens.front().total_degree()) equigenerated = false;

  cls.matroidal = squarefree && equigenerated && !I.gens.empty();
  if (cls.matroidal) {
    for (const Monomial& a : I.gens) {
      for (const Monomial& b : I.gens) {
        if (a == b) continue;
        for (int i = 1; i <= n && cls.matroidal; ++i) {
          if (!(a[i] > b[i])) continue;
          bool exchanged = false;
          for (int j = 1; j <= n && !exchanged; ++j) {
            if (!(a[j] < b[j])) continue;
            Monomial swapped =
                quotient(star(Monomial::variable(j, n), a), Monomial::variable(i, n));
            exchanged = std::find(I.gens.begin(), I.gens.end(), swapped) != I.gens.end();
          }
          if (!exchanged) cls.matroidal = false;
        }
        if (!cls.matroidal) break;
      }
      if (!cls.matroidal) break;
    }
  }
  return cls;
}

bool revlex_less(const SkewContext& ctx, const Monomial& a, const Monomial& b) {
  int da = a.zdegree(ctx), db = b.zdegree(ctx);
  if (da != db) return da < db;
  // Equal degree: a precedes b iff a is revlex-larger, i.e. the last
  // nonzero entry of a-b is negative.
  for (int i = ctx.n; i >= 1; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0;
  }
  return false;
}

std::vector<Monomial> revlex_order(const SkewContext& ctx, std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const Monomial& a, const Monomial& b) {
                     return revlex_less(ctx, a, b);
                   });
  return gens;
}

std::optional<std::vector<Monomial>> search_linear_quotient_order(const MonomialIdeal& I) {
  if (I.gens.size() > 8)
    throw std::invalid_argument("search_linear_quotient_order: more than 8 generators");
  std::vector<size_t> perm(I.gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Monomial> ordered;
    ordered.reserve(perm.size());
    for (size_t k : perm) ordered.push_back(I.gens[k]);
    MonomialIdeal J(I.ctx, ordered);
    if (linear_quotients(J).ok()) return ordered;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace skewht
