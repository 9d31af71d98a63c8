#include "skewht/resolutions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace skewht {

namespace {

// All k-subsets of items (ascending), in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> sub;
    sub.reserve(static_cast<size_t>(k));
    for (int i : idx) sub.push_back(items[static_cast<size_t>(i)]);
    out.push_back(std::move(sub));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

int alpha(const std::vector<int>& sigma, int i) {
  int a = 0;
  for (int j : sigma)
    if (j < i) ++a;
  return a;
}

std::vector<int> erase_element(const std::vector<int>& sigma, int t) {
  std::vector<int> out;
  out.reserve(sigma.size() - 1);
  for (int j : sigma)
    if (j != t) out.push_back(j);
  return out;
}

using LabelKey = std::pair<std::vector<int>, Monomial>;

}  // namespace

FreeComplex twisted_taylor(const SkewContext& ctx,
                           const std::vector<Monomial>& gens, const Monomial& u,
                           std::vector<int> names) {
  if (gens.empty())
    throw std::invalid_argument("twisted_taylor: empty generator list");
  const int s = static_cast<int>(gens.size());
  if (names.empty()) {
    names.resize(static_cast<size_t>(s));
    std::iota(names.begin(), names.end(), 1);
  }
  if (static_cast<int>(names.size()) != s ||
      !std::is_sorted(names.begin(), names.end()) ||
      std::adjacent_find(names.begin(), names.end()) != names.end())
    throw std::invalid_argument("twisted_taylor: names must be strictly increasing");

  std::vector<int> positions(static_cast<size_t>(s));
  std::iota(positions.begin(), positions.end(), 1);
  auto lcm_of = [&](const std::vector<int>& sigma) {
    Monomial m = Monomial::unit(ctx.n);
    for (int pos : sigma) m = lcm(m, gens[static_cast<size_t>(pos - 1)]);
    return m;
  };
  auto rename = [&](const std::vector<int>& sigma) {
    std::vector<int> out;
    out.reserve(sigma.size());
    for (int pos : sigma) out.push_back(names[static_cast<size_t>(pos - 1)]);
    return out;
  };

  SymbolicRing ring;
  FreeComplex C;
  C.ctx = ctx;
  C.modules.resize(static_cast<size_t>(s) + 1);
  C.diffs.resize(static_cast<size_t>(s) + 1);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(s) + 1);
  for (int i = 0; i <= s; ++i) {
    for (const auto& sigma : subsets_of_size(positions, i)) {
      index[static_cast<size_t>(i)][sigma] =
          static_cast<int>(C.modules[static_cast<size_t>(i)].size());
      C.modules[static_cast<size_t>(i)].push_back(
          {rename(sigma), u, star(lcm_of(sigma), u)});
    }
  }
  for (int i = 1; i <= s; ++i) {
    SparseMat<QLaurent> d(C.rank(i - 1), C.rank(i));
    int col = 0;
    for (const auto& sigma : subsets_of_size(positions, i)) {
      Monomial m_sigma = lcm_of(sigma);
      for (int t : sigma) {
        std::vector<int> sigma_t = erase_element(sigma, t);
        Monomial m_sigma_t = lcm_of(sigma_t);
        Monomial quot = quotient(m_sigma, m_sigma_t);
        QLaurent c = bichar_C(star(m_sigma_t, u), quot).inverse();
        if (alpha(sigma, t) % 2 != 0) c = -c;
        d.add(ring, index[static_cast<size_t>(i - 1)].at(sigma_t), col, quot, c);
      }
      ++col;
    }
    C.diffs[static_cast<size_t>(i)] = std::move(d);
  }
  return C;
}

FreeComplex taylor(const SkewContext& ctx, const std::vector<Monomial>& gens) {
  return twisted_taylor(ctx, gens, Monomial::unit(ctx.n));
}

FreeComplex koszul(const SkewContext& ctx, const std::vector<Monomial>& gens,
                   std::vector<int> names) {
  if (gens.empty()) throw std::invalid_argument("koszul: empty generator list");
  const int s = static_cast<int>(gens.size());
  if (names.empty()) {
    names.resize(static_cast<size_t>(s));
    std::iota(names.begin(), names.end(), 1);
  }
  std::vector<int> positions(static_cast<size_t>(s));
  std::iota(positions.begin(), positions.end(), 1);
  auto product_of = [&](const std::vector<int>& sigma) {
    Monomial m = Monomial::unit(ctx.n);
    for (int pos : sigma) m = star(m, gens[static_cast<size_t>(pos - 1)]);
    return m;
  };
  auto rename = [&](const std::vector<int>& sigma) {
    std::vector<int> out;
    out.reserve(sigma.size());
    for (int pos : sigma) out.push_back(names[static_cast<size_t>(pos - 1)]);
    return out;
  };

  SymbolicRing ring;
  FreeComplex C;
  C.ctx = ctx;
  C.modules.resize(static_cast<size_t>(s) + 1);
  C.diffs.resize(static_cast<size_t>(s) + 1);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(s) + 1);
  for (int i = 0; i <= s; ++i) {
    for (const auto& sigma : subsets_of_size(positions, i)) {
      index[static_cast<size_t>(i)][sigma] =
          static_cast<int>(C.modules[static_cast<size_t>(i)].size());
      C.modules[static_cast<size_t>(i)].push_back(
          {rename(sigma), Monomial::unit(ctx.n), product_of(sigma)});
    }
  }
  for (int i = 1; i <= s; ++i) {
    SparseMat<QLaurent> d(C.rank(i - 1), C.rank(i));
    int col = 0;
    for (const auto& sigma : subsets_of_size(positions, i)) {
      for (size_t r = 0; r < sigma.size(); ++r) {
        int pos = sigma[r];
        const Monomial& m_r = gens[static_cast<size_t>(pos - 1)];
        Monomial tail = Monomial::unit(ctx.n);  // product of later monomials
        for (size_t l = r + 1; l < sigma.size(); ++l)
          tail = star(tail, gens[static_cast<size_t>(sigma[l] - 1)]);
        QLaurent c = bichar_chi(m_r, tail);
        if (r % 2 != 0) c = -c;
        d.add(ring, index[static_cast<size_t>(i - 1)].at(erase_element(sigma, pos)),
              col, m_r, c);
      }
      ++col;
    }
    C.diffs[static_cast<size_t>(i)] = std::move(d);
  }
  return C;
}

namespace {

ChainMap diagonal_map(FreeComplex source, FreeComplex target,
                      const std::vector<std::vector<QLaurent>>& diag) {
  SymbolicRing ring;
  ChainMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.mats.resize(diag.size());
  for (size_t i = 0; i < diag.size(); ++i) {
    SparseMat<QLaurent> m(f.target.rank(static_cast<int>(i)),
                          f.source.rank(static_cast<int>(i)));
    for (size_t k = 0; k < diag[i].size(); ++k)
      m.add(ring, static_cast<int>(k), static_cast<int>(k),
            Monomial::unit(f.source.ctx.n), diag[i][k]);
    f.mats[i] = std::move(m);
  }
  return f;
}

}  // namespace

ChainMap iso_taylor_twist(const SkewContext& ctx,
                          const std::vector<Monomial>& gens, const Monomial& u) {
  FreeComplex src = taylor(ctx, gens);
  FreeComplex tgt = twisted_taylor(ctx, gens, u);
  std::vector<std::vector<QLaurent>> diag(src.modules.size());
  for (size_t i = 0; i < src.modules.size(); ++i)
    for (const BasisLabel& lab : src.modules[i])
      diag[i].push_back(bichar_C(u, lab.mdeg));  // mdeg = m_sigma for the Taylor side
  return diagonal_map(std::move(src), std::move(tgt), diag);
}

ChainMap iso_taylor_koszul(const SkewContext& ctx,
                           const std::vector<Monomial>& gens) {
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (!gcd(gens[a], gens[b]).is_unit())
        throw std::invalid_argument("iso_taylor_koszul: supports not disjoint");
  FreeComplex src = taylor(ctx, gens);
  FreeComplex tgt = koszul(ctx, gens);
  std::vector<std::vector<QLaurent>> diag(src.modules.size());
  for (size_t i = 0; i < src.modules.size(); ++i)
    for (const BasisLabel& lab : src.modules[i]) {
      QLaurent c = QLaurent::one();
      Monomial head = Monomial::unit(ctx.n);
      for (size_t r = 0; r < lab.sigma.size(); ++r) {
        const Monomial& m_r = gens[static_cast<size_t>(lab.sigma[r] - 1)];
        if (r >= 1) c = c * bichar_C(head, m_r).inverse();
        head = star(head, m_r);
      }
      diag[i].push_back(c);
    }
  return diagonal_map(std::move(src), std::move(tgt), diag);
}

ChainMap invert_diagonal(const ChainMap& f) {
  SymbolicRing ring;
  ChainMap inv;
  inv.source = f.target;
  inv.target = f.source;
  inv.mats.resize(f.mats.size());
  for (size_t i = 0; i < f.mats.size(); ++i) {
    SparseMat<QLaurent> m(f.mats[i].cols, f.mats[i].rows);
    size_t seen = 0;
    for (const auto& [rc, entry] : f.mats[i].entries) {
      if (rc.first != rc.second || entry.size() != 1 ||
          !entry.begin()->first.is_unit())
        throw std::invalid_argument("invert_diagonal: map is not unit-diagonal");
      m.add(ring, rc.first, rc.second, entry.begin()->first,
            entry.begin()->second.inverse());
      ++seen;
    }
    if (seen != static_cast<size_t>(f.mats[i].rows))
      throw std::invalid_argument("invert_diagonal: missing diagonal entries");
    inv.mats[i] = std::move(m);
  }
  return inv;
}

namespace {

LinearQuotientCert prefix_cert(const LinearQuotientCert& cert, size_t j) {
  LinearQuotientCert out;
  out.sets.assign(cert.sets.begin(), cert.sets.begin() + j);
  out.regular = cert.regular;
  return out;
}

const std::vector<int>& set_of(const MonomialIdeal& I,
                               const LinearQuotientCert& cert, const Monomial& g) {
  for (size_t k = 0; k < I.gens.size(); ++k)
    if (I.gens[k] == g) return cert.sets[k];
  throw std::logic_error("set_of: not a generator");
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

FreeComplex herzog_takayama(const MonomialIdeal& I, const LinearQuotientCert& cert) {
  if (I.gens.empty())
    throw std::invalid_argument("herzog_takayama: empty generator list");
  if (cert.sets.size() != I.gens.size())
    throw std::invalid_argument("herzog_takayama: certificate size mismatch");
  if (!cert.regular)
    throw std::invalid_argument(
        "herzog_takayama: certificate is not regular; use cone_resolution");
  const SkewContext& ctx = I.ctx;
  const int n = ctx.n;
  SymbolicRing ring;

  int top = static_cast<int>(cert.max_set_size()) + 1;
  FreeComplex C;
  C.ctx = ctx;
  C.modules.resize(static_cast<size_t>(top) + 1);
  C.diffs.resize(static_cast<size_t>(top) + 1);
  C.modules[0].push_back({{}, Monomial::unit(n), Monomial::unit(n)});

  std::vector<std::map<LabelKey, int>> index(static_cast<size_t>(top) + 1);
  for (int i = 1; i <= top; ++i) {
    for (size_t j = 0; j < I.gens.size(); ++j) {
      for (const auto& sigma : subsets_of_size(cert.sets[j], i - 1)) {
        index[static_cast<size_t>(i)][{sigma, I.gens[j]}] =
            static_cast<int>(C.modules[static_cast<size_t>(i)].size());
        C.modules[static_cast<size_t>(i)].push_back(
            {sigma, I.gens[j], star(variable_product(sigma, n), I.gens[j])});
      }
    }
  }

  // d_1: e(0;u) -> u.
  {
    SparseMat<QLaurent> d(C.rank(0), C.rank(1));
    for (int c = 0; c < C.rank(1); ++c)
      d.add(ring, 0, c, C.modules[1][static_cast<size_t>(c)].u, QLaurent::one());
    C.diffs[1] = std::move(d);
  }

  for (int i = 2; i <= top; ++i) {
    SparseMat<QLaurent> d(C.rank(i - 1), C.rank(i));
    for (int c = 0; c < C.rank(i); ++c) {
      const BasisLabel& lab = C.modules[static_cast<size_t>(i)][static_cast<size_t>(c)];
      const Monomial& u = lab.u;
      for (int t : lab.sigma) {
        std::vector<int> sigma_t = erase_element(lab.sigma, t);
        bool odd = alpha(lab.sigma, t) % 2 != 0;
        Monomial x_t = Monomial::variable(t, n);
        Monomial x_sigma_t = variable_product(sigma_t, n);

        QLaurent c1 = bichar_C(star(x_sigma_t, u), x_t).inverse();
        d.add(ring, index[static_cast<size_t>(i - 1)].at({sigma_t, u}), c, x_t,
              odd ? c1 : -c1);

        auto [g, kappa] = decompose(I, star(x_t, u));
        if (!subset_of(sigma_t, set_of(I, cert, g))) continue;  // e(sigma;u)=0 rule
        QLaurent c2 = bichar_C(star(x_sigma_t, g), kappa).inverse();
        d.add(ring, index[static_cast<size_t>(i - 1)].at({sigma_t, g}), c, kappa,
              odd ? -c2 : c2);
      }
    }
    C.diffs[static_cast<size_t>(i)] = std::move(d);
  }
  return C;
}

ChainMap ht_lifting(const MonomialIdeal& I, const LinearQuotientCert& cert, int j) {
  if (j < 1 || j + 1 > static_cast<int>(I.gens.size()))
    throw std::invalid_argument("ht_lifting: j out of range");
  if (!cert.regular)
    throw std::invalid_argument("ht_lifting: certificate is not regular");
  const SkewContext& ctx = I.ctx;
  const int n = ctx.n;
  SymbolicRing ring;

  const Monomial& u_next = I.gens[static_cast<size_t>(j)];
  const std::vector<int>& su = cert.sets[static_cast<size_t>(j)];
  std::vector<Monomial> vars;
  vars.reserve(su.size());
  for (int k : su) vars.push_back(Monomial::variable(k, n));

  MonomialIdeal Ij = I.prefix(static_cast<size_t>(j));
  LinearQuotientCert cj = prefix_cert(cert, static_cast<size_t>(j));

  ChainMap f;
  if (vars.empty()) {
    // set(u_{j+1}) empty: the source is the rank-one complex R.e(0;u_{j+1}).
    f.source.ctx = ctx;
    f.source.modules = {{{std::vector<int>{}, u_next, u_next}}};
    f.source.diffs.resize(1);
  } else {
    f.source = twisted_taylor(ctx, vars, u_next, su);
  }
  f.target = herzog_takayama(Ij, cj);
  int top = std::max(f.source.length(), f.target.length());
  f.mats.resize(static_cast<size_t>(top) + 1);

  std::vector<std::map<LabelKey, int>> tindex(f.target.modules.size());
  for (size_t i = 0; i < f.target.modules.size(); ++i)
    for (size_t k = 0; k < f.target.modules[i].size(); ++k)
      tindex[i][{f.target.modules[i][k].sigma, f.target.modules[i][k].u}] =
          static_cast<int>(k);

  for (int i = 0; i <= top; ++i) {
    SparseMat<QLaurent> m(f.target.rank(i), f.source.rank(i));
    for (int c = 0; c < f.source.rank(i); ++c) {
      const BasisLabel& lab =
          f.source.modules[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (i == 0) {
        m.add(ring, 0, c, u_next, QLaurent::one());
        continue;
      }
      for (int t : lab.sigma) {
        std::vector<int> sigma_t = erase_element(lab.sigma, t);
        auto [g, kappa] = decompose(Ij, star(Monomial::variable(t, n), u_next));
        if (!subset_of(sigma_t, set_of(Ij, cj, g))) continue;
        QLaurent c2 = bichar_C(variable_product(sigma_t, n), kappa).inverse() *
                      bichar_C(g, kappa).inverse();
        if (alpha(lab.sigma, t) % 2 != 0) c2 = -c2;
        m.add(ring, tindex[static_cast<size_t>(i)].at({sigma_t, g}), c, kappa, c2);
      }
    }
    f.mats[static_cast<size_t>(i)] = std::move(m);
  }
  return f;
}

FpComplex cone_resolution(const MonomialIdeal& I, const LinearQuotientCert& cert,
                          const QSpecialization& spec) {
  if (I.gens.empty())
    throw std::invalid_argument("cone_resolution: empty generator list");
  if (cert.sets.size() != I.gens.size())
    throw std::invalid_argument("cone_resolution: certificate size mismatch");
  if (spec.field() != QSpecialization::Field::Prime)
    throw std::invalid_argument("cone_resolution: prime-field specialization required");
  const SkewContext& ctx = I.ctx;
  const int n = ctx.n;
  SpecializedRing ring(spec);
  const std::uint64_t p = spec.prime();

  // Base step: R <- R.e(0;u_1).
  FpComplex F;
  F.ctx = ctx;
  F.modules.resize(2);
  F.diffs.resize(2);
  F.modules[0].push_back({{}, Monomial::unit(n), Monomial::unit(n)});
  F.modules[1].push_back({{}, I.gens[0], I.gens[0]});
  F.diffs[1] = SparseMat<std::uint64_t>(1, 1);
  F.diffs[1].add(ring, 0, 0, I.gens[0], 1);

  for (size_t j = 1; j < I.gens.size(); ++j) {
    const Monomial& u_next = I.gens[j];
    const std::vector<int>& su = cert.sets[j];

    FpComplex T;
    if (su.empty()) {
      T.ctx = ctx;
      T.modules = {{{std::vector<int>{}, u_next, u_next}}};
      T.diffs.resize(1);
    } else {
      std::vector<Monomial> vars;
      vars.reserve(su.size());
      for (int k : su) vars.push_back(Monomial::variable(k, n));
      T = specialize(twisted_taylor(ctx, vars, u_next, su), spec);
    }

    FpChainMap psi;
    psi.source = T;
    psi.target = F;
    int top = std::max(T.length(), F.length());
    psi.mats.resize(static_cast<size_t>(top) + 1);
    for (int i = 0; i <= top; ++i)
      psi.mats[static_cast<size_t>(i)] =
          SparseMat<std::uint64_t>(F.rank(i), T.rank(i));
    psi.mats[0].add(ring, 0, 0, u_next, 1);

    for (int i = 1; i <= T.length(); ++i) {
      SparseMat<std::uint64_t> mi(F.rank(i), T.rank(i));
      for (int c = 0; c < T.rank(i); ++c) {
        const BasisLabel& lab =
            T.modules[static_cast<size_t>(i)][static_cast<size_t>(c)];
        const Monomial& b = lab.mdeg;

        // rhs = psi_{i-1}(d(e(sigma;u_next))) as an element of F_{i-1}.
        std::map<int, MatEntry<std::uint64_t>> rhs_elem;
        for (const auto& [rc_d, e_d] : T.diffs[static_cast<size_t>(i)].entries) {
          if (rc_d.second != c) continue;
          for (const auto& [m1, s1] : e_d) {
            for (const auto& [rc_f, e_f] : psi.mats[static_cast<size_t>(i - 1)].entries) {
              if (rc_f.second != rc_d.first) continue;
              for (const auto& [m2, s2] : e_f)
                entry_add(ring, rhs_elem[rc_f.first], star(m2, m1),
                          ring.mul(ring.mul(s2, s1), ring.C(m2, m1)));
            }
          }
        }

        Strand st = strand(F, b, spec);
        const std::vector<int>& rows = st.picks[static_cast<size_t>(i - 1)];
        const std::vector<int>& cols = st.picks[static_cast<size_t>(i)];
        std::vector<std::uint64_t> rhs(rows.size(), 0);
        for (const auto& [row, entry] : rhs_elem) {
          if (entry.empty()) continue;
          if (entry.size() != 1)
            throw std::logic_error("cone_resolution: inhomogeneous lifting rhs");
          auto it = std::find(rows.begin(), rows.end(), row);
          if (it == rows.end())
            throw std::logic_error("cone_resolution: rhs outside strand");
          rhs[static_cast<size_t>(it - rows.begin())] = entry.begin()->second;
        }
        auto x = fp_solve(st.mats[static_cast<size_t>(i)], rhs, p);
        if (!x)
          throw std::logic_error(
              "cone_resolution: strand solve infeasible (internal bug)");
        for (size_t r = 0; r < cols.size(); ++r) {
          if ((*x)[r] == 0) continue;
          int label_row = cols[r];
          Monomial mono = difference(
              b, F.modules[static_cast<size_t>(i)][static_cast<size_t>(label_row)].mdeg);
          mi.add(ring, label_row, c, mono, (*x)[r]);
        }
      }
      psi.mats[static_cast<size_t>(i)] = std::move(mi);
    }

    F = mapping_cone(ring, psi);  // also validates the lifting commutes
  }
  return F;
}

}  // namespace skewht
