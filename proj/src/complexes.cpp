#include "skewht/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewht {

std::string BasisLabel::str() const {
  std::ostringstream out;
  out << "e(";
  for (size_t k = 0; k < sigma.size(); ++k) {
    if (k) out << ",";
    out << sigma[k];
  }
  out << ";" << monomial_str(u) << ")";
  return out.str();
}

FpComplex specialize(const FreeComplex& C, const QSpecialization& spec) {
  SpecializedRing ring(spec);
  FpComplex out;
  out.ctx = C.ctx;
  out.modules = C.modules;
  out.diffs.resize(C.diffs.size());
  for (size_t i = 1; i < C.diffs.size(); ++i) {
    SparseMat<std::uint64_t> d(C.diffs[i].rows, C.diffs[i].cols);
    for (const auto& [rc, entry] : C.diffs[i].entries)
      for (const auto& [m, s] : entry)
        d.add(ring, rc.first, rc.second, m, spec.eval_fp(s));
    out.diffs[i] = std::move(d);
  }
  return out;
}

FpChainMap specialize(const ChainMap& f, const QSpecialization& spec) {
  SpecializedRing ring(spec);
  FpChainMap out;
  out.source = specialize(f.source, spec);
  out.target = specialize(f.target, spec);
  out.mats.resize(f.mats.size());
  for (size_t i = 0; i < f.mats.size(); ++i) {
    SparseMat<std::uint64_t> m(f.mats[i].rows, f.mats[i].cols);
    for (const auto& [rc, entry] : f.mats[i].entries)
      for (const auto& [mono, s] : entry)
        m.add(ring, rc.first, rc.second, mono, spec.eval_fp(s));
    out.mats[i] = std::move(m);
  }
  return out;
}

std::vector<int> Strand::dims() const {
  std::vector<int> d;
  d.reserve(picks.size());
  for (const auto& pk : picks) d.push_back(static_cast<int>(pk.size()));
  return d;
}

Strand strand(const FpComplex& C, const Monomial& b, const QSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  Strand s;
  int L = C.length();
  s.picks.resize(L + 1);
  std::vector<std::map<int, int>> pos(L + 1);  // label index -> strand row
  for (int i = 0; i <= L; ++i) {
    for (int k = 0; k < C.rank(i); ++k) {
      if (divides(C.modules[i][k].mdeg, b)) {
        pos[i][k] = static_cast<int>(s.picks[i].size());
        s.picks[i].push_back(k);
      }
    }
  }
  s.mats.resize(L + 1);
  for (int i = 1; i <= L; ++i) {
    FpMat m(static_cast<int>(s.picks[i - 1].size()),
            static_cast<int>(s.picks[i].size()));
    for (const auto& [rc, entry] : C.diffs[i].entries) {
      auto rit = pos[i - 1].find(rc.first);
      auto cit = pos[i].find(rc.second);
      if (cit == pos[i].end()) continue;
      if (entry.size() != 1)
        throw std::logic_error("strand: non-homogeneous differential entry");
      if (rit == pos[i - 1].end())
        // col divides b but row does not; homogeneity makes this impossible
        throw std::logic_error("strand: row multidegree does not divide b");
      const auto& [mono, scalar] = *entry.begin();
      // Embedding e_col x^(b-mdeg col): the coefficient picks up the
      // bicharacter twist of the entry monomial past that cofactor.
      Monomial cof = difference(b, C.modules[i][rc.second].mdeg);
      std::uint64_t v = fp::mul(scalar, bichar_C_fp(mono, cof, spec), p);
      m.at(rit->second, cit->second) = v;
    }
    s.mats[i] = std::move(m);
  }
  return s;
}

std::vector<int> strand_homology(const Strand& s, std::uint64_t p) {
  int L = static_cast<int>(s.picks.size()) - 1;
  std::vector<int> ranks(L + 2, 0);
  for (int i = 1; i <= L; ++i) ranks[i] = fp_rank(s.mats[i], p);
  std::vector<int> h(L + 1, 0);
  for (int i = 0; i <= L; ++i)
    h[i] = static_cast<int>(s.picks[i].size()) - ranks[i] - ranks[i + 1];
  return h;
}

namespace {

std::vector<Monomial> box_multidegrees(const Monomial& top) {
  std::vector<Monomial> out;
  Monomial b = Monomial::unit(top.n());
  while (true) {
    out.push_back(b);
    int i = 0;
    while (i < top.n() && b.e[i] == top.e[i]) {
      b.e[i] = 0;
      ++i;
    }
    if (i == top.n()) break;
    ++b.e[i];
  }
  return out;
}

void check_strand_of_resolution(const FpComplex& C, const MonomialIdeal& I,
                                const QSpecialization& spec, const Monomial& b,
                                std::vector<StrandFailure>& failures) {
  const std::uint64_t p = spec.prime();
  Strand s = strand(C, b, spec);
  for (int i = 2; i <= C.length(); ++i) {
    if (!fp_mul(s.mats[i - 1], s.mats[i], p).is_zero()) {
      failures.push_back({b, i, -1, "strand composite nonzero"});
      return;
    }
  }
  std::vector<int> h = strand_homology(s, p);
  int h0_expected = contains(I, b) ? 0 : 1;
  if (h[0] != h0_expected)
    failures.push_back({b, 0, h[0], "H_0 dimension"});
  for (int i = 1; i < static_cast<int>(h.size()); ++i)
    if (h[i] != 0) failures.push_back({b, i, h[i], "nonvanishing homology"});
}

}  // namespace

ResolutionReport verify_resolution(const FpComplex& C, const MonomialIdeal& I,
                                   const QSpecialization& spec, Engine engine) {
  if (I.gens.empty())
    throw std::invalid_argument("verify_resolution: empty generator list");
  CheckResult hom = check_homogeneous(C);
  if (!hom.ok) throw std::invalid_argument("verify_resolution: " + hom.note);
  if (C.rank(0) != 1 || !C.modules[0][0].mdeg.is_unit())
    throw std::invalid_argument(
        "verify_resolution: degree 0 must be rank one in multidegree 0");

  Monomial top = I.gens.front();
  for (const Monomial& g : I.gens) top = lcm(top, g);
  std::vector<Monomial> degrees = box_multidegrees(top);

  ResolutionReport report;
  report.strands_checked = static_cast<long>(degrees.size());

  if (engine == Engine::Parallel) {
#ifdef _OPENMP
    int nb = static_cast<int>(degrees.size());
    std::vector<std::vector<StrandFailure>> local(
        static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < nb; ++k)
      check_strand_of_resolution(C, I, spec, degrees[static_cast<size_t>(k)],
                                 local[static_cast<size_t>(omp_get_thread_num())]);
    for (auto& part : local)
      report.failures.insert(report.failures.end(), part.begin(), part.end());
#else
    engine = Engine::Serial;
#endif
  }
  if (engine == Engine::Serial) {
    for (const Monomial& b : degrees)
      check_strand_of_resolution(C, I, spec, b, report.failures);
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const StrandFailure& a, const StrandFailure& b) {
              return std::tie(a.b.e, a.degree) < std::tie(b.b.e, b.degree);
            });
  report.ok = report.failures.empty();
  return report;
}

ResolutionReport verify_resolution(const FreeComplex& C, const MonomialIdeal& I,
                                   const QSpecialization& spec, Engine engine) {
  return verify_resolution(specialize(C, spec), I, spec, engine);
}

BettiTable graded_betti(const FreeComplex& C) {
  CheckResult min = check_minimal(C);
  if (!min.ok)
    throw std::invalid_argument(
        "graded_betti: complex is not minimal (unit differential entry)");
  BettiTable table;
  for (int i = 0; i <= C.length(); ++i)
    for (const BasisLabel& lab : C.modules[i])
      table[{i, lab.mdeg.zdegree(C.ctx)}] += 1;
  return table;
}

namespace {

// Homology of (F tensor k) in one exact multidegree b: only labels with
// multidegree equal to b survive, and only unit-monomial coefficients act.
void tor_dims_at(const FpComplex& F, const Monomial& b, std::uint64_t p,
                 std::map<std::pair<int, int>, long long>& table,
                 const SkewContext& ctx) {
  int L = F.length();
  std::vector<std::vector<int>> picks(L + 1);
  std::vector<std::map<int, int>> pos(L + 1);
  for (int i = 0; i <= L; ++i)
    for (int k = 0; k < F.rank(i); ++k)
      if (F.modules[i][k].mdeg == b) {
        pos[i][k] = static_cast<int>(picks[i].size());
        picks[i].push_back(k);
      }
  std::vector<FpMat> mats(L + 1);
  for (int i = 1; i <= L; ++i) {
    FpMat m(static_cast<int>(picks[i - 1].size()),
            static_cast<int>(picks[i].size()));
    for (const auto& [rc, entry] : F.diffs[i].entries) {
      auto rit = pos[i - 1].find(rc.first);
      auto cit = pos[i].find(rc.second);
      if (rit == pos[i - 1].end() || cit == pos[i].end()) continue;
      auto unit_term = entry.find(Monomial::unit(b.n()));
      if (unit_term != entry.end())
        m.at(rit->second, cit->second) = unit_term->second;
    }
    mats[i] = std::move(m);
  }
  std::vector<int> ranks(L + 2, 0);
  for (int i = 1; i <= L; ++i) ranks[i] = fp_rank(mats[i], p);
  for (int i = 0; i <= L; ++i) {
    long long h = static_cast<long long>(picks[i].size()) - ranks[i] - ranks[i + 1];
    if (h != 0) table[{i, b.zdegree(ctx)}] += h;
  }
}

}  // namespace

BettiTable minimal_betti_from_strands(const FreeComplex& F,
                                      const QSpecialization& spec, Engine engine) {
  FpComplex Fs = specialize(F, spec);
  const std::uint64_t p = spec.prime();
  std::vector<Monomial> degrees;
  for (const auto& mod : F.modules)
    for (const auto& lab : mod) degrees.push_back(lab.mdeg);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  BettiTable table;
  if (engine == Engine::Parallel) {
#ifdef _OPENMP
    int nb = static_cast<int>(degrees.size());
    std::vector<BettiTable> local(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < nb; ++k)
      tor_dims_at(Fs, degrees[static_cast<size_t>(k)], p,
                  local[static_cast<size_t>(omp_get_thread_num())], F.ctx);
    for (const auto& part : local)
      for (const auto& [key, v] : part) table[key] += v;
    return table;
#else
    engine = Engine::Serial;
#endif
  }
  for (const Monomial& b : degrees) tor_dims_at(Fs, b, p, table, F.ctx);
  return table;
}

}  // namespace skewht
