// Command-line front end: certify linear quotients, build and verify
// resolutions, compute invariants, export complexes.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "skewht/invariants.hpp"
#include "skewht/json_io.hpp"
#include "skewht/problem.hpp"
#include "skewht/resolutions.hpp"

using namespace skewht;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitInput = 2;

struct Loaded {
  ProblemFile problem;
  MonomialIdeal I;
};

Loaded load(const std::string& path, const std::string& order_override) {
  ProblemFile p = load_problem(path);
  if (!order_override.empty()) {
    if (order_override == "given")
      p.order = ProblemFile::Order::Given;
    else if (order_override == "revlex")
      p.order = ProblemFile::Order::Revlex;
    else if (order_override == "search")
      p.order = ProblemFile::Order::Search;
    else
      throw std::runtime_error("--order must be given|revlex|search");
  }
  std::vector<Monomial> ordered = apply_order(p);
  if (ordered.empty()) throw std::runtime_error("no generators after minimization");
  return {p, MonomialIdeal(p.ctx, ordered)};
}

json gens_json(const std::vector<Monomial>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(monomial_str(g));
  return a;
}

QSpecialization spec_for(const Loaded& in, std::uint64_t seed) {
  if (in.problem.qspec &&
      in.problem.qspec->field() == QSpecialization::Field::Prime)
    return *in.problem.qspec;
  return QSpecialization::random_prime(in.I.ctx.n, seed);
}

int emit(const json& report, int code) {
  std::cout << report.dump(2) << "\n";
  return code;
}

int cmd_lq_check(const std::string& file, const std::string& order) {
  Loaded in = load(file, order);
  LinearQuotientResult res = certify(in.I);
  json report = {{"command", "lq-check"}, {"generators", gens_json(in.I.gens)}};
  if (!res.ok()) {
    report["ok"] = false;
    report["failure_index"] = res.failure_index;
    report["offending_colon_generator"] = monomial_str(res.offender);
    return emit(report, kExitMath);
  }
  report["ok"] = true;
  report["sets"] = res.cert->sets;
  report["regular"] = res.cert->regular;
  if (!res.cert->regular && res.cert->counterexample) {
    report["counterexample"] = {
        {"u", monomial_str(res.cert->counterexample->first)},
        {"s", res.cert->counterexample->second}};
  }
  IdealClass cls = classify(in.I);
  report["classify"] = {{"stable", cls.stable},
                        {"squarefree_stable", cls.squarefree_stable},
                        {"matroidal", cls.matroidal}};
  return emit(report, kExitOk);
}

// Builds one of the symbolic complexes; ht failures are math errors.
FreeComplex build_symbolic(const std::string& method, const Loaded& in,
                           const std::string& twist, json& report) {
  if (method == "taylor") return taylor(in.I.ctx, in.I.gens);
  if (method == "twisted-taylor") {
    Monomial u = parse_monomial(twist, in.I.ctx);
    return twisted_taylor(in.I.ctx, in.I.gens, u);
  }
  if (method == "koszul") return koszul(in.I.ctx, in.I.gens);
  if (method == "ht") {
    LinearQuotientResult res = certify(in.I);
    if (!res.ok())
      throw std::domain_error(
          "ideal has no linear quotients in this order (try --order search)");
    if (!res.cert->regular)
      throw std::domain_error(
          "decomposition function is not regular; use --method cone");
    report["sets"] = res.cert->sets;
    return herzog_takayama(in.I, *res.cert);
  }
  throw std::domain_error("unknown method: " + method);
}

json ranks_json(const std::vector<std::vector<BasisLabel>>& modules) {
  json r = json::array();
  for (const auto& mod : modules) r.push_back(mod.size());
  return r;
}

int cmd_resolve(const std::string& file, const std::string& order,
                const std::string& method, const std::string& twist,
                bool check_iso_taylor, std::uint64_t seed,
                const std::string& out) {
  Loaded in = load(file, order);
  json report = {{"command", "resolve"},
                 {"method", method},
                 {"generators", gens_json(in.I.gens)}};
  try {
    if (method == "cone") {
      LinearQuotientResult res = certify(in.I);
      if (!res.ok())
        throw std::domain_error("ideal has no linear quotients in this order");
      QSpecialization spec = spec_for(in, seed);
      FpComplex C = cone_resolution(in.I, *res.cert, spec);
      report["ok"] = true;
      report["ranks"] = ranks_json(C.modules);
      report["regular"] = res.cert->regular;
      if (!out.empty())
        throw std::domain_error("--out supports the symbolic methods only");
      return emit(report, kExitOk);
    }
    FreeComplex C = build_symbolic(method, in, twist, report);
    if (check_iso_taylor) {
      if (method != "koszul")
        throw std::domain_error("--check-iso-taylor applies to --method koszul");
      ChainMap psi = iso_taylor_koszul(in.I.ctx, in.I.gens);  // throws on overlap
      SymbolicRing sym;
      report["iso_taylor"] = check_chain_map(sym, psi).ok;
    }
    report["ok"] = true;
    report["ranks"] = ranks_json(C.modules);
    if (!out.empty()) {
      std::ofstream os(out);
      if (!os) throw std::runtime_error("cannot write " + out);
      os << complex_to_json(C).dump(2) << "\n";
      report["exported"] = out;
    }
    return emit(report, kExitOk);
  } catch (const std::domain_error& e) {
    report["ok"] = false;
    report["error"] = e.what();
    return emit(report, kExitMath);
  } catch (const std::invalid_argument& e) {
    report["ok"] = false;
    report["error"] = e.what();
    return emit(report, kExitMath);
  }
}

int cmd_verify(const std::string& file, const std::string& order,
               const std::string& method, const std::string& twist, bool d2,
               bool minimal, bool strands, std::uint64_t seed) {
  if (!d2 && !minimal && !strands) d2 = minimal = strands = true;
  Loaded in = load(file, order);
  json report = {{"command", "verify"}, {"method", method}};
  bool ok = true;
  try {
    if (method == "cone") {
      // numeric path: d.d = 0 and strand exactness per specialization
      LinearQuotientResult res = certify(in.I);
      if (!res.ok())
        throw std::domain_error("ideal has no linear quotients in this order");
      json sj;
      for (int pass = 0; pass < 2; ++pass) {
        QSpecialization spec = spec_for(in, seed + static_cast<unsigned>(pass));
        FpComplex C = cone_resolution(in.I, *res.cert, spec);
        SpecializedRing ring(spec);
        json pj;
        if (d2) {
          bool r = check_complex(ring, C).ok;
          pj["d2"] = r;
          ok = ok && r;
        }
        if (minimal) {
          bool r = check_minimal(C).ok;
          pj["minimal"] = r;
          ok = ok && r;
        }
        if (strands) {
          ResolutionReport r = verify_resolution(C, in.I, spec);
          pj["strands_ok"] = r.ok;
          pj["checked"] = r.strands_checked;
          ok = ok && r.ok;
        }
        sj[pass == 0 ? "first" : "second"] = std::move(pj);
      }
      report["specializations"] = std::move(sj);
      report["ok"] = ok;
      return emit(report, ok ? kExitOk : kExitMath);
    }
    FreeComplex C = build_symbolic(method, in, twist, report);
    SymbolicRing sym;
    if (d2) {
      CheckResult r = check_complex(sym, C);
      report["d2"] = r.ok;
      ok = ok && r.ok;
    }
    if (minimal) {
      CheckResult r = check_minimal(C);
      report["minimal"] = r.ok;
      ok = ok && r.ok;
    }
    if (strands) {
      json sj;
      for (int pass = 0; pass < 2; ++pass) {
        QSpecialization spec = spec_for(in, seed + static_cast<unsigned>(pass));
        ResolutionReport r = verify_resolution(C, in.I, spec);
        sj["checked"] = r.strands_checked;
        json fails = json::array();
        for (const auto& f : r.failures)
          fails.push_back({{"b", monomial_str(f.b)},
                           {"degree", f.degree},
                           {"note", f.note}});
        sj[pass == 0 ? "first" : "second"] = {{"ok", r.ok},
                                              {"failures", fails}};
        ok = ok && r.ok;
      }
      report["strands"] = sj;
    }
    report["ok"] = ok;
    return emit(report, ok ? kExitOk : kExitMath);
  } catch (const std::domain_error& e) {
    report["ok"] = false;
    report["error"] = e.what();
    return emit(report, kExitMath);
  } catch (const std::invalid_argument& e) {
    report["ok"] = false;
    report["error"] = e.what();
    return emit(report, kExitMath);
  }
}

int cmd_invariants(const std::string& file, const std::string& order) {
  Loaded in = load(file, order);
  LinearQuotientResult res = certify(in.I);
  json report = {{"command", "invariants"}, {"generators", gens_json(in.I.gens)}};
  if (!res.ok()) {
    report["ok"] = false;
    report["error"] = "ideal has no linear quotients in this order";
    return emit(report, kExitMath);
  }
  const LinearQuotientCert& cert = *res.cert;
  report["ok"] = true;
  report["poincare"] = poincare_to_json(poincare_series(in.I, cert).poly);
  report["betti"] = betti_vector(in.I, cert);
  report["pd"] = projective_dimension(in.I, cert);
  report["reg"] = regularity(in.I, cert);
  report["regular"] = cert.regular;
  if (!cert.regular)
    report["note"] =
        "closed-form invariants are valid, but the explicit HT differential "
        "is unavailable for a non-regular decomposition function";
  return emit(report, kExitOk);
}

int cmd_golden() {
  GoldenReport rep = golden_example();
  for (const auto& line : rep.lines) std::cout << line << "\n";
  if (!rep.ok) {
    for (const auto& m : rep.mismatches) std::cout << "mismatch: " << m << "\n";
    return kExitMath;
  }
  std::cout << "golden example reproduced exactly\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free resolutions of monomial ideals in skew polynomial rings"};
  app.require_subcommand(1);

  std::string file, order, method = "ht", twist = "1", out;
  std::uint64_t seed = 0;
  bool d2 = false, minimal = false, strands = false, check_iso = false;
  int rc = kExitOk;

  auto* lq = app.add_subcommand("lq-check", "certify linear quotients and classify");
  lq->add_option("file", file)->required();
  lq->add_option("--order", order, "override the order directive: given|revlex|search");
  lq->callback([&] { rc = cmd_lq_check(file, order); });

  auto* resolve = app.add_subcommand("resolve", "build a resolution");
  resolve->add_option("file", file)->required();
  resolve->add_option("--method", method,
                      "ht | taylor | twisted-taylor | koszul | cone");
  resolve->add_option("--twist", twist, "twisting monomial for twisted-taylor");
  resolve->add_option("--seed", seed, "seed for the random specialization (cone)");
  resolve->add_option("--out", out, "export the complex as JSON");
  resolve->add_option("--order", order);
  resolve->add_flag("--check-iso-taylor", check_iso,
                    "with koszul: verify the comparison with the Taylor complex");
  resolve->callback(
      [&] { rc = cmd_resolve(file, order, method, twist, check_iso, seed, out); });

  auto* verify = app.add_subcommand("verify", "check d.d=0, minimality, strands");
  verify->add_option("file", file)->required();
  verify->add_option("--method", method);
  verify->add_option("--twist", twist);
  verify->add_option("--seed", seed);
  verify->add_flag("--d2", d2);
  verify->add_flag("--minimal", minimal);
  verify->add_flag("--strands", strands);
  verify->add_option("--order", order);
  verify->callback(
      [&] { rc = cmd_verify(file, order, method, twist, d2, minimal, strands, seed); });

  auto* inv = app.add_subcommand("invariants", "closed-form homological invariants");
  inv->add_option("file", file)->required();
  inv->add_option("--order", order);
  inv->callback([&] { rc = cmd_invariants(file, order); });

  auto* exp = app.add_subcommand("export", "build and export a complex as JSON");
  exp->add_option("file", file)->required();
  exp->add_option("--method", method);
  exp->add_option("--twist", twist);
  exp->add_option("--order", order);
  exp->add_option("--out", out)->required();
  exp->callback([&] { rc = cmd_resolve(file, order, method, twist, false, seed, out); });

  auto* golden = app.add_subcommand("golden", "reproduce the worked example");
  golden->callback([&] { rc = cmd_golden(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return rc;
}
