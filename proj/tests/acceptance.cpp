// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skewht/invariants.hpp"
#include "skewht/problem.hpp"
#include "skewht/resolutions.hpp"

using namespace skewht;

namespace {

const SymbolicRing sym;
int failures = 0;

void run(int number, const std::string& name, const std::function<std::string()>& fn) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = fn();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (detail.rfind("FAIL", 0) == 0) ok = false;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("[%d/8] %s  %s (%lld ms)%s%s\n", number, ok ? "PASS" : "FAIL",
              name.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " — ",
              detail.c_str());
  if (!ok) ++failures;
}

std::string fail(const std::string& msg) { return "FAIL: " + msg; }

MonomialIdeal quartet() {
  SkewContext ctx(4);
  auto m = [&](const char* s) { return parse_monomial(s, ctx); };
  return MonomialIdeal(ctx, {m("x1*x2"), m("x1*x3"), m("x2*x3"), m("x2*x4")});
}

}  // namespace

int main() {
  // Shared randomized corpus: ideals with a regular linear-quotient order,
  // n <= 4, at most 5 generators, exponents <= 2.
  std::vector<corpus::CertifiedIdeal> reg = corpus::regular_corpus(2025, 100);

  run(1, "golden example: set data and d2/d3 match exactly", [&] {
    auto start = std::chrono::steady_clock::now();
    GoldenReport rep = golden_example();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!rep.ok) return fail(rep.mismatches.front());
    if (ms >= 1000) return fail("exceeded the 1 s budget");
    return std::string("checked " + std::to_string(rep.lines.size()) + " facts");
  });

  run(2, "theorem check on 100 regular ideals (d2=0, minimal, strands)", [&] {
    long strands = 0;
    for (size_t k = 0; k < reg.size(); ++k) {
      const auto& [I, cert] = reg[k];
      FreeComplex HT = herzog_takayama(I, cert);
      if (!check_complex(sym, HT).ok)
        return fail("d.d != 0 at ideal " + std::to_string(k));
      if (!check_minimal(HT).ok)
        return fail("unit entry at ideal " + std::to_string(k));
      for (std::uint64_t s : {2 * k + 1, 2 * k + 2}) {
        QSpecialization spec = QSpecialization::random_prime(I.ctx.n, s);
        ResolutionReport rep = verify_resolution(HT, I, spec);
        if (!rep.ok) return fail("inexact strand at ideal " + std::to_string(k));
        strands += rep.strands_checked;
      }
    }
    return std::to_string(reg.size()) + " ideals, " + std::to_string(strands) +
           " strands exact under two specializations each";
  });

  run(3, "isomorphisms phi and psi: chain maps, invertible (50 each)", [&] {
    std::mt19937_64 rng(303);
    for (int it = 0; it < 50; ++it) {
      MonomialIdeal I = corpus::random_ideal(rng, {2, 4, 4, 2});
      Monomial u = corpus::random_monomial(rng, I.ctx.n, 2, true);
      ChainMap phi = iso_taylor_twist(I.ctx, I.gens, u);
      if (!check_chain_map(sym, phi).ok)
        return fail("phi fails at instance " + std::to_string(it));
      if (!check_chain_map(sym, invert_diagonal(phi)).ok)
        return fail("phi inverse fails at instance " + std::to_string(it));
    }
    for (int it = 0; it < 50; ++it) {
      int n = 3 + static_cast<int>(rng() % 4);
      auto gens = corpus::random_disjoint_monomials(rng, n, 2 + static_cast<int>(rng() % 2));
      ChainMap psi = iso_taylor_koszul(SkewContext(n), gens);
      if (!check_chain_map(sym, psi).ok)
        return fail("psi fails at instance " + std::to_string(it));
      if (!check_chain_map(sym, invert_diagonal(psi)).ok)
        return fail("psi inverse fails at instance " + std::to_string(it));
    }
    return std::string("50 twisted-Taylor and 50 Koszul comparisons");
  });

  run(4, "cone of the lifting = next Herzog-Takayama stage, every prefix", [&] {
    long cones = 0;
    for (size_t k = 0; k < reg.size(); ++k) {
      const auto& [I, cert] = reg[k];
      for (int j = 1; j < static_cast<int>(I.gens.size()); ++j) {
        FreeComplex cone = mapping_cone(sym, ht_lifting(I, cert, j));
        MonomialIdeal prefix = I.prefix(static_cast<size_t>(j) + 1);
        auto pres = certify(prefix);
        if (!pres.ok() || !pres.cert->regular)
          return fail("prefix lost its certificate at ideal " + std::to_string(k));
        FreeComplex HT = herzog_takayama(prefix, *pres.cert);
        if (cone.modules != HT.modules)
          return fail("label mismatch at ideal " + std::to_string(k));
        for (int i = 1; i <= HT.length(); ++i)
          if (!(cone.diffs[static_cast<size_t>(i)] ==
                HT.diffs[static_cast<size_t>(i)]))
            return fail("entry mismatch at ideal " + std::to_string(k) +
                        ", prefix " + std::to_string(j));
        ++cones;
      }
    }
    return std::to_string(cones) + " mapping cones compared entry-by-entry";
  });

  run(5, "corollary invariants vs constructed resolution vs Tor oracle", [&] {
    // Worked example values first.
    MonomialIdeal Iq = quartet();
    auto qres = certify(Iq);
    if (!qres.ok()) return fail("quartet certificate");
    if (betti_vector(Iq, *qres.cert) != std::vector<long long>{4, 4, 1})
      return fail("quartet Betti vector");
    if (projective_dimension(Iq, *qres.cert) != 3) return fail("quartet pd");
    if (regularity(Iq, *qres.cert) != 2) return fail("quartet regularity");
    BivariatePoly expectP;
    expectP.add(0, 0, 1);
    expectP.add(1, 2, 4);
    expectP.add(2, 2, 4);
    expectP.add(3, 2, 1);
    if (!(poincare_series(Iq, *qres.cert).poly == expectP))
      return fail("quartet Poincare series");

    for (size_t k = 0; k < reg.size(); ++k) {
      const auto& [I, cert] = reg[k];
      FreeComplex HT = herzog_takayama(I, cert);
      BettiTable table = graded_betti(HT);

      std::map<int, long long> by_degree;
      int top = 0, regularity_from_table = 0;
      for (const auto& [ij, v] : table) {
        by_degree[ij.first] += v;
        if (v > 0) top = std::max(top, ij.first);
        if (v > 0 && ij.first >= 1)
          regularity_from_table =
              std::max(regularity_from_table, ij.second - (ij.first - 1));
      }
      for (int i = 0; i <= static_cast<int>(cert.max_set_size()); ++i)
        if (betti_numbers(I, cert, i) != by_degree[i + 1])
          return fail("Betti mismatch at ideal " + std::to_string(k));
      if (projective_dimension(I, cert) != top)
        return fail("pd mismatch at ideal " + std::to_string(k));
      if (regularity(I, cert) != regularity_from_table)
        return fail("regularity mismatch at ideal " + std::to_string(k));
      PoincareSeries P = poincare_series(I, cert);
      for (int i = 0; i <= static_cast<int>(cert.max_set_size()); ++i) {
        long long slice = 0;
        for (const auto& [st, c] : P.poly.coeffs)
          if (st.first == i + 1) slice += c;
        if (slice != betti_numbers(I, cert, i))
          return fail("Poincare slice mismatch at ideal " + std::to_string(k));
      }

      QSpecialization spec = QSpecialization::random_prime(
          I.ctx.n, 4000 + static_cast<std::uint64_t>(k));
      BettiTable tor = minimal_betti_from_strands(taylor(I.ctx, I.gens), spec);
      if (tor != table) return fail("Tor oracle mismatch at ideal " + std::to_string(k));
    }
    return std::to_string(reg.size()) + " ideals cross-validated three ways";
  });

  run(6, "stable ideals: C(g,kappa)=1 and q=1 matches the classical matrices", [&] {
    std::mt19937_64 rng(606);
    QSpecialization ones = QSpecialization::ones(8);
    int done = 0;
    while (done < 20) {
      MonomialIdeal I = corpus::random_stable_ideal(rng);
      if (!classify(I).stable) return fail("generator is not stable");
      auto res = certify(I);
      if (!res.ok() || !res.cert->regular)
        return fail("stable ideal failed to certify");
      for (size_t j = 0; j < I.gens.size(); ++j)
        for (int t : res.cert->sets[j]) {
          auto [g, kappa] =
              decompose(I, star(Monomial::variable(t, I.ctx.n), I.gens[j]));
          if (!bichar_C(g, kappa).is_one())
            return fail("C(g,kappa) != 1 on a stable ideal");
          if (max_index(g) > min_index(kappa))
            return fail("max g > min kappa on a stable ideal");
        }
      FreeComplex HT = herzog_takayama(I, *res.cert);
      oracles::CommutativeHT classical = oracles::commutative_ht(I, *res.cert);
      for (int i = 1; i <= HT.length(); ++i) {
        oracles::IntMat got;
        for (const auto& [rc, entry] : HT.diffs[static_cast<size_t>(i)].entries)
          for (const auto& [m, s] : entry) {
            Rational v = ones.eval_rat(s);
            if (denominator(v) != 1) return fail("non-integer q=1 entry");
            got[rc][m] = static_cast<long long>(numerator(v));
          }
        if (got != classical.diffs[static_cast<size_t>(i)])
          return fail("q=1 matrices differ from the classical construction");
      }
      ++done;
    }
    return std::string("20 stable ideals degenerate correctly");
  });

  run(7, "squarefree stable and matroidal recipes under revlex", [&] {
    std::mt19937_64 rng(707);
    int sq = 0;
    while (sq < 12) {
      MonomialIdeal I = corpus::random_squarefree_stable_ideal(rng);
      if (!classify(I).squarefree_stable)
        return fail("generator is not squarefree stable");
      auto res = certify(I);
      if (!res.ok() || !res.cert->regular)
        return fail("squarefree stable ideal failed to certify");
      for (size_t j = 0; j < I.gens.size(); ++j) {
        std::vector<int> expected;
        int mx = max_index(I.gens[j]);
        for (int i = 1; i < mx; ++i)
          if (I.gens[j][i] == 0) expected.push_back(i);
        if (res.cert->sets[j] != expected)
          return fail("set(u) formula violated for a squarefree stable ideal");
      }
      FreeComplex HT = herzog_takayama(I, *res.cert);
      if (!check_complex(sym, HT).ok) return fail("squarefree stable d.d != 0");
      if (!check_minimal(HT).ok) return fail("squarefree stable non-minimal");
      for (std::uint64_t s : {5000ull + static_cast<std::uint64_t>(sq), 6000ull + static_cast<std::uint64_t>(sq)}) {
        QSpecialization spec = QSpecialization::random_prime(I.ctx.n, s);
        if (!verify_resolution(HT, I, spec).ok)
          return fail("squarefree stable strand failure");
      }
      ++sq;
    }
    int mt = 0;
    while (mt < 8) {
      MonomialIdeal I = corpus::random_matroidal_ideal(rng);
      if (!classify(I).matroidal) return fail("generator is not matroidal");
      auto res = certify(I);
      if (!res.ok() || !res.cert->regular)
        return fail("matroidal ideal failed to certify");
      FreeComplex HT = herzog_takayama(I, *res.cert);
      if (!check_complex(sym, HT).ok) return fail("matroidal d.d != 0");
      if (!check_minimal(HT).ok) return fail("matroidal non-minimal");
      for (std::uint64_t s : {7000ull + static_cast<std::uint64_t>(mt), 8000ull + static_cast<std::uint64_t>(mt)}) {
        QSpecialization spec = QSpecialization::random_prime(I.ctx.n, s);
        if (!verify_resolution(HT, I, spec).ok)
          return fail("matroidal strand failure");
      }
      ++mt;
    }
    return std::string("12 squarefree stable + 8 matroidal ideals verified");
  });

  run(8, "non-regular fallback: cone resolution of a discovered instance", [&] {
    auto found = corpus::find_nonregular_linear_quotient();
    if (!found) return fail("no non-regular linear-quotient ideal found");
    if (found->cert.regular) return fail("search returned a regular instance");
    std::ostringstream gens;
    for (const auto& g : found->I.gens) gens << monomial_str(g) << " ";
    for (std::uint64_t s : {81ull, 82ull}) {
      QSpecialization spec = QSpecialization::random_prime(found->I.ctx.n, s);
      FpComplex C = cone_resolution(found->I, found->cert, spec);
      ResolutionReport rep = verify_resolution(C, found->I, spec);
      if (!rep.ok) return fail("cone resolution strand failure");
    }
    return "discovered (" + gens.str() + "), cone output exact under two specializations";
  });

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
