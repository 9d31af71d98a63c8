#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "skewht/ideals.hpp"

using namespace skewht;

namespace {

const SkewContext ctx4(4);

Monomial mono(const std::string& s) { return parse_monomial(s, ctx4); }

MonomialIdeal example_ideal() {
  return MonomialIdeal(
      ctx4, {mono("x1*x2"), mono("x1*x3"), mono("x2*x3"), mono("x2*x4")});
}

}  // namespace

TEST_CASE("minimize") {
  CHECK(minimize({mono("x1"), mono("x1*x2")}) == std::vector<Monomial>{mono("x1")});
  std::vector<Monomial> gens = {mono("x1*x2"), mono("x1*x3"), mono("x2*x3"),
                                mono("x2*x4")};
  CHECK(minimize(gens) == gens);
  CHECK(minimize({}).empty());
  CHECK(minimize({mono("x1*x2"), mono("x1*x2")}) ==
        std::vector<Monomial>{mono("x1*x2")});
  // survivor order preserved
  CHECK(minimize({mono("x2*x3"), mono("x1"), mono("x1*x3")}) ==
        std::vector<Monomial>{mono("x2*x3"), mono("x1")});
}

TEST_CASE("membership") {
  MonomialIdeal I = example_ideal();
  CHECK(contains(I, mono("x1*x2*x3")));
  CHECK_FALSE(contains(I, mono("x1*x4")));
  CHECK(contains(I, I.gens[0]));
  CHECK_FALSE(contains(MonomialIdeal(ctx4, {}), mono("x1")));
}

TEST_CASE("colon ideals by variables") {
  ColonResult r = colon_variables({mono("x1*x2"), mono("x1*x3"), mono("x2*x3")},
                                  mono("x2*x4"));
  CHECK(r.all_variables);
  CHECK(r.vars == std::vector<int>{1, 3});

  r = colon_variables({mono("x1*x2")}, mono("x1*x3"));
  CHECK(r.all_variables);
  CHECK(r.vars == std::vector<int>{2});

  r = colon_variables({mono("x1*x2*x3")}, mono("x4"));
  CHECK_FALSE(r.all_variables);
  CHECK(r.offender == mono("x1*x2*x3"));
}

TEST_CASE("linear quotients on the quartet ideal") {
  LinearQuotientResult res = linear_quotients(example_ideal());
  REQUIRE(res.ok());
  CHECK(res.cert->sets ==
        std::vector<std::vector<int>>{{}, {2}, {1}, {1, 3}});

  LinearQuotientResult single =
      linear_quotients(MonomialIdeal(ctx4, {mono("x1*x2")}));
  REQUIRE(single.ok());
  CHECK(single.cert->sets == std::vector<std::vector<int>>{{}});

  LinearQuotientResult bad =
      linear_quotients(MonomialIdeal(ctx4, {mono("x1*x2*x3"), mono("x4")}));
  CHECK_FALSE(bad.ok());
  CHECK(bad.failure_index == 1);
  CHECK(bad.offender == mono("x1*x2*x3"));
}

TEST_CASE("decomposition function and complement") {
  MonomialIdeal I = example_ideal();
  auto [g1, k1] = decompose(I, mono("x1*x2*x4"));
  CHECK(g1 == mono("x1*x2"));
  CHECK(k1 == mono("x4"));
  auto [g2, k2] = decompose(I, mono("x2*x3*x4"));
  CHECK(g2 == mono("x2*x3"));
  CHECK(k2 == mono("x4"));
  auto [g3, k3] = decompose(I, I.gens[0]);
  CHECK(g3 == I.gens[0]);
  CHECK(k3.is_unit());
  CHECK_THROWS(decompose(I, mono("x1*x4")));
}

TEST_CASE("decomposition lemmas on certified ideals (random)") {
  auto corpus = corpus::regular_corpus(101, 15);
  std::mt19937_64 rng(102);
  for (const auto& [I, cert] : corpus) {
    const int n = I.ctx.n;
    for (size_t j = 0; j < I.gens.size(); ++j) {
      // uniqueness: v * w with set(v) disjoint from supp(w) decomposes to v
      const Monomial& v = I.gens[j];
      Monomial w = Monomial::unit(n);
      for (int i = 1; i <= n; ++i) {
        bool allowed = std::find(cert.sets[j].begin(), cert.sets[j].end(), i) ==
                       cert.sets[j].end();
        if (allowed && rng() % 2 == 0)
          w.e[static_cast<size_t>(i - 1)] = static_cast<int>(rng() % 3);
      }
      auto [g, kappa] = decompose(I, star(v, w));
      CHECK(g == v);
      CHECK(star(g, kappa) == star(v, w));
    }
    // set(g(u)) and supp(kappa(u)) are disjoint; earlier prefixes miss u
    for (int it = 0; it < 10; ++it) {
      size_t j = rng() % I.gens.size();
      Monomial m = star(I.gens[j], corpus::random_monomial(rng, n, 2, true));
      auto [g, kappa] = decompose(I, m);
      CHECK(star(g, kappa) == m);
      size_t gj = 0;
      while (I.gens[gj] != g) ++gj;
      if (gj > 0) CHECK_FALSE(contains(I.prefix(gj), m));
      for (int s : cert.sets[gj]) CHECK(kappa[s] == 0);
    }
  }
}

TEST_CASE("g(u*v) = g(u) iff set(g(u)) misses supp(v) (random)") {
  auto corpus = corpus::regular_corpus(103, 10);
  std::mt19937_64 rng(104);
  for (const auto& [I, cert] : corpus) {
    const int n = I.ctx.n;
    for (int it = 0; it < 25; ++it) {
      Monomial u = star(I.gens[rng() % I.gens.size()],
                        corpus::random_monomial(rng, n, 1, true));
      Monomial v = corpus::random_monomial(rng, n, 2, true);
      auto [gu, ku] = decompose(I, u);
      auto [guv, kuv] = decompose(I, star(u, v));
      size_t gj = 0;
      while (I.gens[gj] != gu) ++gj;
      bool disjoint = true;
      for (int s : cert.sets[gj])
        if (v[s] != 0) disjoint = false;
      CHECK((guv == gu) == disjoint);
    }
  }
}

TEST_CASE("regularity of the quartet ideal and the swap identity") {
  MonomialIdeal I = example_ideal();
  LinearQuotientResult res = certify(I);
  REQUIRE(res.ok());
  CHECK(res.cert->regular);

  // swap identity g(x_s*g(x_t*u)) = g(x_s*x_t*u) for s,t in set(u)
  for (size_t j = 0; j < I.gens.size(); ++j) {
    for (int s : res.cert->sets[j])
      for (int t : res.cert->sets[j]) {
        Monomial xs = Monomial::variable(s, 4), xt = Monomial::variable(t, 4);
        auto [gt, kt] = decompose(I, star(xt, I.gens[j]));
        auto [a, ka] = decompose(I, star(xs, gt));
        auto [b, kb] = decompose(I, star(xs, star(xt, I.gens[j])));
        CHECK(a == b);
      }
  }

  LinearQuotientResult single = certify(MonomialIdeal(ctx4, {mono("x1^2")}));
  REQUIRE(single.ok());
  CHECK(single.cert->regular);
}

TEST_CASE("a non-regular linear-quotient ideal exists and is found") {
  auto found = corpus::find_nonregular_linear_quotient();
  REQUIRE(found.has_value());
  CHECK_FALSE(found->cert.regular);
  REQUIRE(found->cert.counterexample.has_value());
  // the witness violates the regularity inclusion
  auto [u, s] = *found->cert.counterexample;
  size_t j = 0;
  while (found->I.gens[j] != u) ++j;
  auto [g, kappa] = decompose(found->I, star(Monomial::variable(s, 4), u));
  size_t gj = 0;
  while (found->I.gens[gj] != g) ++gj;
  bool included = std::includes(
      found->cert.sets[j].begin(), found->cert.sets[j].end(),
      found->cert.sets[gj].begin(), found->cert.sets[gj].end());
  CHECK_FALSE(included);
}

TEST_CASE("classification of ideal families") {
  IdealClass c = classify(example_ideal());
  CHECK_FALSE(c.stable);
  CHECK(c.squarefree_stable);
  CHECK_FALSE(c.matroidal);

  MonomialIdeal powers(ctx4, {mono("x1^2"), mono("x1*x2"), mono("x2^2")});
  c = classify(powers);
  CHECK(c.stable);
  CHECK_FALSE(c.squarefree_stable);
  CHECK_FALSE(c.matroidal);

  MonomialIdeal triangle(ctx4, {mono("x1*x2"), mono("x1*x3"), mono("x2*x3")});
  c = classify(triangle);
  CHECK(c.matroidal);
}

TEST_CASE("revlex order") {
  std::vector<Monomial> in = {mono("x2*x3"), mono("x1*x2"), mono("x1*x3")};
  std::vector<Monomial> expected = {mono("x1*x2"), mono("x1*x3"), mono("x2*x3")};
  CHECK(revlex_order(ctx4, in) == expected);
  CHECK(revlex_order(ctx4, {mono("x1*x4")}) == std::vector<Monomial>{mono("x1*x4")});
  CHECK(revlex_order(ctx4, expected) == expected);  // idempotent

  // strict total order axioms on random monomials
  std::mt19937_64 rng(105);
  for (int it = 0; it < 40; ++it) {
    std::vector<Monomial> ms;
    for (int k = 0; k < 6; ++k) ms.push_back(corpus::random_monomial(rng, 4, 2, true));
    for (const auto& a : ms) CHECK_FALSE(revlex_less(ctx4, a, a));
    for (const auto& a : ms)
      for (const auto& b : ms) {
        if (a == b) continue;
        CHECK(revlex_less(ctx4, a, b) != revlex_less(ctx4, b, a));
        for (const auto& c : ms)
          if (revlex_less(ctx4, a, b) && revlex_less(ctx4, b, c))
            CHECK(revlex_less(ctx4, a, c));
      }
  }
}

TEST_CASE("stable and squarefree stable ideals certify under revlex") {
  std::mt19937_64 rng(106);
  for (int it = 0; it < 12; ++it) {
    MonomialIdeal I = corpus::random_stable_ideal(rng);
    CHECK(classify(I).stable);
    LinearQuotientResult res = certify(I);
    REQUIRE(res.ok());
    CHECK(res.cert->regular);
  }
  for (int it = 0; it < 12; ++it) {
    MonomialIdeal I = corpus::random_squarefree_stable_ideal(rng);
    CHECK(classify(I).squarefree_stable);
    LinearQuotientResult res = certify(I);
    REQUIRE(res.ok());
    CHECK(res.cert->regular);
    // set u = { i | i < max u, i not in supp u }
    for (size_t j = 0; j < I.gens.size(); ++j) {
      std::vector<int> expected;
      int mx = max_index(I.gens[j]);
      for (int i = 1; i < mx; ++i)
        if (I.gens[j][i] == 0) expected.push_back(i);
      CHECK(res.cert->sets[j] == expected);
    }
  }
}

TEST_CASE("matroidal ideals certify under revlex") {
  std::mt19937_64 rng(107);
  for (int it = 0; it < 10; ++it) {
    MonomialIdeal I = corpus::random_matroidal_ideal(rng);
    CHECK(classify(I).matroidal);
    LinearQuotientResult res = certify(I);
    REQUIRE(res.ok());
    CHECK(res.cert->regular);
  }
}

TEST_CASE("order search") {
  // this quartet order fails immediately; search finds a working one
  MonomialIdeal scrambled(
      ctx4, {mono("x1*x3"), mono("x2*x4"), mono("x1*x2"), mono("x2*x3")});
  CHECK_FALSE(linear_quotients(scrambled).ok());
  auto found = search_linear_quotient_order(scrambled);
  REQUIRE(found.has_value());
  CHECK(linear_quotients(MonomialIdeal(ctx4, *found)).ok());

  MonomialIdeal no_order(ctx4, {mono("x1*x2"), mono("x3*x4")});
  CHECK_FALSE(search_linear_quotient_order(no_order).has_value());
}
