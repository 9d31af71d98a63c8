#include "skewht/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace skewht {

using nlohmann::json;

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Rational(cpp_int(s));
  cpp_int num(s.substr(0, slash));
  cpp_int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

json qlaurent_to_json(const QLaurent& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json qs = json::array();
    for (const auto& [pr, e] : m)
      qs.push_back({{"pair", {pr.first, pr.second}}, {"exp", e}});
    terms.push_back({{"coeff", rational_to_string(c)}, {"q", qs}});
  }
  return terms;
}

QLaurent qlaurent_from_json(const json& j) {
  QLaurent s;
  for (const auto& term : j) {
    QExponent m;
    for (const auto& q : term.at("q")) {
      int i = q.at("pair").at(0).get<int>();
      int k = q.at("pair").at(1).get<int>();
      int e = q.at("exp").get<int>();
      if (!(1 <= i && i < k)) throw std::invalid_argument("q pair must have i < j");
      if (e != 0) m[{i, k}] = e;
    }
    s += QLaurent(std::move(m),
                  rational_from_string(term.at("coeff").get<std::string>()));
  }
  return s;
}

json monomial_to_json(const Monomial& m) { return json(m.e); }

Monomial monomial_from_json(const json& j, int n) {
  auto v = j.get<std::vector<int>>();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("monomial: wrong exponent count");
  return Monomial(std::move(v));
}

json label_to_json(const BasisLabel& lab) {
  return {{"sigma", lab.sigma},
          {"u", monomial_to_json(lab.u)},
          {"mdeg", monomial_to_json(lab.mdeg)}};
}

BasisLabel label_from_json(const json& j, int n) {
  BasisLabel lab;
  lab.sigma = j.at("sigma").get<std::vector<int>>();
  lab.u = monomial_from_json(j.at("u"), n);
  lab.mdeg = monomial_from_json(j.at("mdeg"), n);
  return lab;
}

json complex_to_json(const FreeComplex& C) {
  json mods = json::array();
  for (const auto& mod : C.modules) {
    json level = json::array();
    for (const auto& lab : mod) level.push_back(label_to_json(lab));
    mods.push_back(std::move(level));
  }
  json diffs = json::array();
  for (int i = 1; i <= C.length(); ++i) {
    json entries = json::array();
    for (const auto& [rc, entry] : C.diffs[static_cast<size_t>(i)].entries) {
      json terms = json::array();
      for (const auto& [m, s] : entry)
        terms.push_back({{"monomial", monomial_to_json(m)},
                         {"coeff", qlaurent_to_json(s)}});
      entries.push_back(
          {{"row", rc.first}, {"col", rc.second}, {"terms", std::move(terms)}});
    }
    diffs.push_back({{"degree", i}, {"entries", std::move(entries)}});
  }
  return {{"n", C.ctx.n},
          {"degrees", C.ctx.degrees},
          {"modules", std::move(mods)},
          {"differentials", std::move(diffs)}};
}

FreeComplex complex_from_json(const json& j) {
  FreeComplex C;
  int n = j.at("n").get<int>();
  C.ctx = SkewContext(n, j.at("degrees").get<std::vector<int>>());
  for (const auto& level : j.at("modules")) {
    std::vector<BasisLabel> mod;
    for (const auto& lab : level) mod.push_back(label_from_json(lab, n));
    C.modules.push_back(std::move(mod));
  }
  C.diffs.resize(C.modules.size());
  for (int i = 1; i <= C.length(); ++i)
    C.diffs[static_cast<size_t>(i)] = SparseMat<QLaurent>(C.rank(i - 1), C.rank(i));
  SymbolicRing ring;
  for (const auto& dj : j.at("differentials")) {
    int i = dj.at("degree").get<int>();
    if (i < 1 || i > C.length())
      throw std::invalid_argument("complex: differential degree out of range");
    SparseMat<QLaurent> d(C.rank(i - 1), C.rank(i));
    for (const auto& ej : dj.at("entries")) {
      int r = ej.at("row").get<int>();
      int c = ej.at("col").get<int>();
      if (r < 0 || r >= d.rows || c < 0 || c >= d.cols)
        throw std::invalid_argument("complex: entry index out of range");
      for (const auto& t : ej.at("terms"))
        d.add(ring, r, c, monomial_from_json(t.at("monomial"), n),
              qlaurent_from_json(t.at("coeff")));
    }
    C.diffs[static_cast<size_t>(i)] = std::move(d);
  }
  return C;
}

json betti_table_to_json(const BettiTable& t) {
  json out = json::array();
  for (const auto& [ij, v] : t) out.push_back({ij.first, ij.second, v});
  return out;
}

json poincare_to_json(const BivariatePoly& p) {
  json out = json::array();
  for (const auto& [st, c] : p.coeffs) out.push_back({st.first, st.second, c});
  return out;
}

}  // namespace skewht
