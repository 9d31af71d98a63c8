#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewht/ideals.hpp"
#include "skewht/qlaurent.hpp"
#include "skewht/skew_ring.hpp"
#include "skewht/strand_kernel.hpp"

namespace skewht {

/// Basis symbol e(sigma; u) of a free module, together with its multidegree.
/// For the rank-1 module in homological degree 0 both monomials are units.
struct BasisLabel {
  std::vector<int> sigma;  // sorted indices
  Monomial u;
  Monomial mdeg;

  friend bool operator==(const BasisLabel& a, const BasisLabel& b) {
    return a.sigma == b.sigma && a.u == b.u && a.mdeg == b.mdeg;
  }
  friend bool operator!=(const BasisLabel& a, const BasisLabel& b) {
    return !(a == b);
  }
  std::string str() const;
};

// --- coefficient rings -----------------------------------------------------

/// Exact coefficients: Laurent polynomials in the q_{i,j}.
struct SymbolicRing {
  using Scalar = QLaurent;
  Scalar zero() const { return QLaurent::zero(); }
  Scalar one() const { return QLaurent::one(); }
  bool is_zero(const Scalar& s) const { return s.is_zero(); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const { return a.inverse(); }
  Scalar C(const Monomial& a, const Monomial& b) const { return bichar_C(a, b); }
};

/// Coefficients specialized into a prime field.
struct SpecializedRing {
  QSpecialization spec;
  using Scalar = std::uint64_t;
  explicit SpecializedRing(QSpecialization s) : spec(std::move(s)) {}
  std::uint64_t p() const { return spec.prime(); }
  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  bool is_zero(Scalar s) const { return s == 0; }
  Scalar add(Scalar a, Scalar b) const { return fp::add(a, b, p()); }
  Scalar mul(Scalar a, Scalar b) const { return fp::mul(a, b, p()); }
  Scalar neg(Scalar a) const { return fp::neg(a, p()); }
  Scalar inv(Scalar a) const { return fp::inv(a, p()); }
  Scalar C(const Monomial& a, const Monomial& b) const {
    return bichar_C_fp(a, b, spec);
  }
};

// --- sparse matrices with ring-element entries ------------------------------

/// Entry of a differential: a finite sum of scalar * monomial terms.
template <class S>
using MatEntry = std::map<Monomial, S>;

template <class Ring>
void entry_add(const Ring& ring, MatEntry<typename Ring::Scalar>& e,
               const Monomial& m, const typename Ring::Scalar& s) {
  if (ring.is_zero(s)) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, s);
    return;
  }
  it->second = ring.add(it->second, s);
  if (ring.is_zero(it->second)) e.erase(it);
}

/// Product of module-map entries: applying first b, then a; coefficients
/// multiply in that order, picking up the bicharacter twist.
template <class Ring>
MatEntry<typename Ring::Scalar> entry_mul(const Ring& ring,
                                          const MatEntry<typename Ring::Scalar>& a,
                                          const MatEntry<typename Ring::Scalar>& b) {
  MatEntry<typename Ring::Scalar> r;
  for (const auto& [ma, sa] : a)
    for (const auto& [mb, sb] : b)
      entry_add(ring, r, star(ma, mb),
                ring.mul(ring.mul(sa, sb), ring.C(ma, mb)));
  return r;
}

template <class S>
struct SparseMat {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, MatEntry<S>> entries;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c) {}

  const MatEntry<S>* find(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? nullptr : &it->second;
  }
  template <class Ring>
  void add(const Ring& ring, int r, int c, const Monomial& m,
           const typename Ring::Scalar& s) {
    if (ring.is_zero(s)) return;
    entry_add(ring, entries[{r, c}], m, s);
    if (entries[{r, c}].empty()) entries.erase({r, c});
  }
  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

template <class Ring>
SparseMat<typename Ring::Scalar> mat_mul(const Ring& ring,
                                         const SparseMat<typename Ring::Scalar>& A,
                                         const SparseMat<typename Ring::Scalar>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  SparseMat<typename Ring::Scalar> R(A.rows, B.cols);
  for (const auto& [rc_a, ea] : A.entries)
    for (const auto& [rc_b, eb] : B.entries) {
      if (rc_a.second != rc_b.first) continue;
      MatEntry<typename Ring::Scalar> prod = entry_mul(ring, ea, eb);
      for (const auto& [m, s] : prod) R.add(ring, rc_a.first, rc_b.second, m, s);
    }
  return R;
}

// --- complexes and chain maps ------------------------------------------------

/// Chain complex of free right modules with labeled bases. diffs[i] maps
/// homological degree i to i-1; diffs[0] is an unused placeholder.
template <class S>
struct BasicComplex {
  SkewContext ctx;
  std::vector<std::vector<BasisLabel>> modules;
  std::vector<SparseMat<S>> diffs;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  int rank(int i) const {
    return (i >= 0 && i < static_cast<int>(modules.size()))
               ? static_cast<int>(modules[i].size())
               : 0;
  }
  SparseMat<S> diff(int i) const {
    if (i >= 1 && i < static_cast<int>(diffs.size())) return diffs[i];
    return SparseMat<S>(rank(i - 1), rank(i));
  }
  long total_rank() const {
    long t = 0;
    for (const auto& mod : modules) t += static_cast<long>(mod.size());
    return t;
  }
};

using FreeComplex = BasicComplex<QLaurent>;
using FpComplex = BasicComplex<std::uint64_t>;

/// Degreewise map f_i: source_i -> target_i commuting with differentials.
template <class S>
struct BasicChainMap {
  BasicComplex<S> source;
  BasicComplex<S> target;
  std::vector<SparseMat<S>> mats;  // mats[i]: source_i -> target_i

  SparseMat<S> mat(int i) const {
    if (i >= 0 && i < static_cast<int>(mats.size())) return mats[i];
    return SparseMat<S>(target.rank(i), source.rank(i));
  }
};

using ChainMap = BasicChainMap<QLaurent>;
using FpChainMap = BasicChainMap<std::uint64_t>;

struct CheckResult {
  bool ok = true;
  int degree = -1, row = -1, col = -1;
  std::string note;
};

/// d(i-1) . d(i) = 0 for all i, by exact cancellation in the coefficients.
template <class Ring>
CheckResult check_complex(const Ring& ring,
                          const BasicComplex<typename Ring::Scalar>& C) {
  for (int i = 2; i <= C.length(); ++i) {
    SparseMat<typename Ring::Scalar> comp =
        mat_mul(ring, C.diff(i - 1), C.diff(i));
    if (!comp.entries.empty()) {
      const auto& [rc, entry] = *comp.entries.begin();
      (void)entry;
      return {false, i, rc.first, rc.second, "d.d != 0"};
    }
  }
  return {};
}

/// d(target) . f = f . d(source) in every degree.
template <class Ring>
CheckResult check_chain_map(const Ring& ring,
                            const BasicChainMap<typename Ring::Scalar>& f) {
  int top = std::max(f.source.length(), f.target.length());
  for (int i = 1; i <= top; ++i) {
    SparseMat<typename Ring::Scalar> lhs =
        mat_mul(ring, f.target.diff(i), f.mat(i));
    SparseMat<typename Ring::Scalar> rhs =
        mat_mul(ring, f.mat(i - 1), f.source.diff(i));
    if (!(lhs == rhs)) return {false, i, -1, -1, "df != fd"};
  }
  return {};
}

/// No differential entry may have a nonzero coefficient on the unit monomial.
template <class S>
CheckResult check_minimal(const BasicComplex<S>& C) {
  for (int i = 1; i <= C.length(); ++i) {
    const SparseMat<S> d = C.diff(i);
    for (const auto& [rc, entry] : d.entries)
      for (const auto& [m, s] : entry)
        if (m.is_unit()) return {false, i, rc.first, rc.second, "unit entry"};
  }
  return {};
}

/// Every entry monomial m must satisfy mdeg(row) * m = mdeg(col).
template <class S>
CheckResult check_homogeneous(const BasicComplex<S>& C) {
  for (int i = 1; i <= C.length(); ++i)
    for (const auto& [rc, entry] : C.diffs[i].entries) {
      const Monomial& row_m = C.modules[i - 1][rc.first].mdeg;
      const Monomial& col_m = C.modules[i][rc.second].mdeg;
      for (const auto& [m, s] : entry)
        if (star(row_m, m) != col_m)
          return {false, i, rc.first, rc.second, "inhomogeneous entry"};
    }
  return {};
}

/// Mapping cone of a chain map f: S -> T, with cone_i = T_i + S_{i-1} and
/// differential blocks [d(T), f; 0, -d(S)]. Rejects non-chain-maps.
template <class Ring>
BasicComplex<typename Ring::Scalar> mapping_cone(
    const Ring& ring, const BasicChainMap<typename Ring::Scalar>& f) {
  if (!check_chain_map(ring, f).ok)
    throw std::invalid_argument("mapping_cone: input is not a chain map");
  const auto& S = f.source;
  const auto& T = f.target;
  if (S.total_rank() == 0) return T;

  BasicComplex<typename Ring::Scalar> cone;
  cone.ctx = T.ctx;
  int top = std::max(T.length(), S.length() + 1);
  cone.modules.resize(top + 1);
  cone.diffs.resize(top + 1);
  for (int i = 0; i <= top; ++i) {
    std::vector<BasisLabel> labels;
    if (i <= T.length()) labels = T.modules[i];
    if (i - 1 >= 0 && i - 1 <= S.length())
      labels.insert(labels.end(), S.modules[i - 1].begin(), S.modules[i - 1].end());
    cone.modules[i] = std::move(labels);
  }
  for (int i = 1; i <= top; ++i) {
    SparseMat<typename Ring::Scalar> d(cone.rank(i - 1), cone.rank(i));
    int row_off = T.rank(i - 1);
    int col_off = T.rank(i);
    const SparseMat<typename Ring::Scalar> dt = T.diff(i);
    const SparseMat<typename Ring::Scalar> fm = f.mat(i - 1);
    const SparseMat<typename Ring::Scalar> ds = S.diff(i - 1);
    for (const auto& [rc, entry] : dt.entries)
      for (const auto& [m, s] : entry) d.add(ring, rc.first, rc.second, m, s);
    for (const auto& [rc, entry] : fm.entries)
      for (const auto& [m, s] : entry)
        d.add(ring, rc.first, col_off + rc.second, m, s);
    for (const auto& [rc, entry] : ds.entries)
      for (const auto& [m, s] : entry)
        d.add(ring, row_off + rc.first, col_off + rc.second, m, ring.neg(s));
    cone.diffs[i] = std::move(d);
  }
  return cone;
}

// --- specialization and strands ----------------------------------------------

/// Evaluate every coefficient of a symbolic complex in the prime field.
FpComplex specialize(const FreeComplex& C, const QSpecialization& spec);
FpChainMap specialize(const ChainMap& f, const QSpecialization& spec);

/// Degree-b slice of a multigraded complex over the specialized field:
/// labels with multidegree dividing x^b, matrices acting on coordinates of
/// the basis vectors e_label * x^(b - mdeg label).
struct Strand {
  std::vector<std::vector<int>> picks;  // per hom degree: selected label indices
  std::vector<FpMat> mats;              // mats[i]: degree i -> i-1

  std::vector<int> dims() const;
};

/// spec must be the specialization the complex was built/specialized with.
Strand strand(const FpComplex& C, const Monomial& b, const QSpecialization& spec);

/// Homology dimensions (degrees 0..length) of a strand, assuming d.d = 0.
std::vector<int> strand_homology(const Strand& s, std::uint64_t p);

enum class Engine { Serial, Parallel };

struct StrandFailure {
  Monomial b;
  int degree = 0;
  int dim = 0;  // offending homology dimension (or -1 for a broken composite)
  std::string note;
};

struct ResolutionReport {
  bool ok = true;
  long strands_checked = 0;
  std::vector<StrandFailure> failures;
};

/// Checks that C resolves R/I within every multidegree b <= lcm(G(I)):
/// H_0 is 1-dimensional iff x^b is outside I (0-dimensional otherwise) and
/// H_i = 0 for i >= 1. Strand slices are independent; the Parallel engine
/// distributes them with OpenMP, the Serial engine is the reference sweep.
ResolutionReport verify_resolution(const FpComplex& C, const MonomialIdeal& I,
                                   const QSpecialization& spec,
                                   Engine engine = Engine::Parallel);
ResolutionReport verify_resolution(const FreeComplex& C, const MonomialIdeal& I,
                                   const QSpecialization& spec,
                                   Engine engine = Engine::Parallel);

/// Graded Betti table: (homological degree, Z-degree) -> rank, read off a
/// minimal complex by counting labels. Non-minimal complexes are rejected.
using BettiTable = std::map<std::pair<int, int>, long long>;
BettiTable graded_betti(const FreeComplex& C);

/// Betti table of R/I extracted from any multigraded free resolution of
/// R/I by strand homology in each exact multidegree (Tor computation).
/// Independent of label counting and of the closed-form corollaries.
BettiTable minimal_betti_from_strands(const FreeComplex& F,
                                      const QSpecialization& spec,
                                      Engine engine = Engine::Parallel);

}  // namespace skewht
