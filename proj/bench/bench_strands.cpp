// Compares the serial reference strand sweep against the OpenMP sweep on
// larger-than-test instances. Not part of ctest; build target bench_strands.

#include <chrono>
#include <cstdio>
#include <random>

#include "../tests/corpus.hpp"
#include "skewht/resolutions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace skewht;

namespace {

double run_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void bench_case(const char* name, const FreeComplex& C, const MonomialIdeal& I,
                const QSpecialization& spec) {
  FpComplex F = specialize(C, spec);
  ResolutionReport serial_report, parallel_report;
  double serial = run_ms(
      [&] { serial_report = verify_resolution(F, I, spec, Engine::Serial); });
  double parallel = run_ms(
      [&] { parallel_report = verify_resolution(F, I, spec, Engine::Parallel); });
  bool agree = serial_report.ok == parallel_report.ok &&
               serial_report.failures.size() == parallel_report.failures.size();
  std::printf("%-28s strands=%-6ld serial=%9.2f ms  parallel=%9.2f ms  speedup=%.2fx  %s\n",
              name, serial_report.strands_checked, serial, parallel,
              serial / parallel, agree ? "verdicts agree" : "VERDICT MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both sweeps run serially\n");
#endif

  // Taylor complex of a 7-generator antichain whose lcm box spans all of
  // 3^6 = 729 multidegrees.
  std::mt19937_64 rng(12'000);
  {
    SkewContext ctx(6);
    std::vector<Monomial> gens;
    for (const char* s : {"x1^2*x2", "x2^2*x3", "x3^2*x4", "x4^2*x5", "x5^2*x6",
                          "x6^2*x1", "x1*x3*x5"})
      gens.push_back(parse_monomial(s, ctx));
    MonomialIdeal I(ctx, minimize(gens));
    QSpecialization spec = QSpecialization::random_prime(ctx.n, 1);
    bench_case("taylor n=6, 7 gens", taylor(ctx, I.gens), I, spec);
  }

  // Herzog-Takayama resolution of the largest stable ideal among a few draws.
  {
    MonomialIdeal best(SkewContext(2), {Monomial::variable(1, 2)});
    for (int it = 0; it < 12; ++it) {
      MonomialIdeal S = corpus::random_stable_ideal(rng, 5, 3);
      auto res = certify(S);
      if (res.ok() && res.cert->regular && S.gens.size() > best.gens.size())
        best = S;
    }
    auto res = certify(best);
    QSpecialization sspec = QSpecialization::random_prime(best.ctx.n, 2);
    bench_case("herzog-takayama stable", herzog_takayama(best, *res.cert), best,
               sspec);
  }

  // Betti extraction from Taylor strands, serial vs parallel.
  {
    SkewContext ctx(6);
    std::vector<Monomial> gens;
    for (const char* s : {"x1^2*x2", "x2^2*x3", "x3^2*x4", "x4^2*x5", "x5^2*x6",
                          "x6^2*x1", "x1*x3*x5"})
      gens.push_back(parse_monomial(s, ctx));
    FreeComplex T = taylor(ctx, gens);
    QSpecialization jspec = QSpecialization::random_prime(ctx.n, 3);
    BettiTable a, b;
    double serial =
        run_ms([&] { a = minimal_betti_from_strands(T, jspec, Engine::Serial); });
    double parallel =
        run_ms([&] { b = minimal_betti_from_strands(T, jspec, Engine::Parallel); });
    std::printf("%-28s                 serial=%9.2f ms  parallel=%9.2f ms  speedup=%.2fx  %s\n",
                "tor betti n=6, 7 gens", serial, parallel, serial / parallel,
                a == b ? "tables agree" : "TABLE MISMATCH");
  }
  return 0;
}
