#include "skewht/problem.hpp"
#include "skewht/resolutions.hpp"

#include <sstream>

namespace skewht {

namespace {

void expect(GoldenReport& rep, bool ok, const std::string& what) {
  rep.lines.push_back((ok ? "ok   " : "FAIL ") + what);
  if (!ok) {
    rep.ok = false;
    rep.mismatches.push_back(what);
  }
}

std::string entry_str(const SparseMat<QLaurent>& m, int r, int c) {
  const MatEntry<QLaurent>* e = m.find(r, c);
  if (!e) return "0";
  RingElement x;
  for (const auto& [mono, s] : *e) x.add_term(mono, s);
  return x.str();
}

}  // namespace

GoldenReport golden_example() {
  GoldenReport rep;
  SkewContext ctx(4);
  auto mono = [&](const std::string& s) { return parse_monomial(s, ctx); };
  MonomialIdeal I(ctx, {mono("x1*x2"), mono("x1*x3"), mono("x2*x3"), mono("x2*x4")});

  LinearQuotientResult lq = certify(I);
  expect(rep, lq.ok(), "linear quotients hold for the given order");
  if (!lq.ok()) return rep;
  const LinearQuotientCert& cert = *lq.cert;

  std::vector<std::vector<int>> expected_sets = {{}, {2}, {1}, {1, 3}};
  expect(rep, cert.sets == expected_sets, "set data = (0, {2}, {1}, {1,3})");
  expect(rep, cert.regular, "decomposition function is regular");
  if (!cert.regular) return rep;

  FreeComplex HT = herzog_takayama(I, cert);
  expect(rep, HT.rank(0) == 1 && HT.rank(1) == 4 && HT.rank(2) == 4 &&
                  HT.rank(3) == 1 && HT.length() == 3,
         "ranks (1, 4, 4, 1)");

  // Expected basis orders.
  std::vector<BasisLabel> deg1 = {{{}, mono("x1*x2"), mono("x1*x2")},
                                  {{}, mono("x1*x3"), mono("x1*x3")},
                                  {{}, mono("x2*x3"), mono("x2*x3")},
                                  {{}, mono("x2*x4"), mono("x2*x4")}};
  std::vector<BasisLabel> deg2 = {{{2}, mono("x1*x3"), mono("x1*x2*x3")},
                                  {{1}, mono("x2*x3"), mono("x1*x2*x3")},
                                  {{1}, mono("x2*x4"), mono("x1*x2*x4")},
                                  {{3}, mono("x2*x4"), mono("x2*x3*x4")}};
  std::vector<BasisLabel> deg3 = {{{1, 3}, mono("x2*x4"), mono("x1*x2*x3*x4")}};
  expect(rep, HT.modules[1] == deg1, "degree-1 basis labels");
  expect(rep, HT.modules[2] == deg2, "degree-2 basis labels");
  expect(rep, HT.modules[3] == deg3, "degree-3 basis label e(1,3;x2x4)");

  SymbolicRing ring;
  auto q = [](int i, int j) { return QLaurent::q(i, j); };

  SparseMat<QLaurent> d2(4, 4);
  d2.add(ring, 0, 0, mono("x3"), QLaurent::one());
  d2.add(ring, 1, 0, mono("x2"), -q(2, 3));
  d2.add(ring, 0, 1, mono("x3"), QLaurent::one());
  d2.add(ring, 2, 1, mono("x1"), -(q(1, 2) * q(1, 3)));
  d2.add(ring, 0, 2, mono("x4"), QLaurent::one());
  d2.add(ring, 3, 2, mono("x1"), -(q(1, 2) * q(1, 4)));
  d2.add(ring, 2, 3, mono("x4"), QLaurent::one());
  d2.add(ring, 3, 3, mono("x3"), -q(3, 4));

  SparseMat<QLaurent> d3(4, 1);
  d3.add(ring, 1, 0, mono("x4"), -QLaurent::one());
  d3.add(ring, 2, 0, mono("x3"), q(3, 4));
  d3.add(ring, 3, 0, mono("x1"), -(q(1, 2) * q(1, 3) * q(1, 4)));

  bool d2_ok = HT.diffs[2] == d2;
  expect(rep, d2_ok, "d2 matches the expected 4x4 matrix");
  if (!d2_ok) {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (!(entry_str(HT.diffs[2], r, c) == entry_str(d2, r, c))) {
          std::ostringstream msg;
          msg << "d2(" << r << "," << c << ") = " << entry_str(HT.diffs[2], r, c)
              << ", expected " << entry_str(d2, r, c);
          rep.mismatches.push_back(msg.str());
        }
  }

  bool d3_ok = HT.diffs[3] == d3;
  expect(rep, d3_ok, "d3 matches the expected column");
  if (!d3_ok) {
    for (int r = 0; r < 4; ++r)
      if (!(entry_str(HT.diffs[3], r, 0) == entry_str(d3, r, 0))) {
        std::ostringstream msg;
        msg << "d3(" << r << ") = " << entry_str(HT.diffs[3], r, 0)
            << ", expected " << entry_str(d3, r, 0);
        rep.mismatches.push_back(msg.str());
      }
  }

  // The convention e(3;x1x2) = 0: no such label, and d3 keeps 3 entries.
  bool dropped = true;
  for (const BasisLabel& lab : HT.modules[2])
    if (lab.sigma == std::vector<int>{3} && lab.u == mono("x1*x2")) dropped = false;
  expect(rep, dropped && HT.diffs[3].entries.size() == 3,
         "dropped symbol e(3;x1x2) never appears");

  return rep;
}

}  // namespace skewht
