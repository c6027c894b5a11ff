// Compares the serial reference kernels against the OpenMP versions on
// representative workloads and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>

#include "grsdual/constructions.hpp"
#include "grsdual/kernels.hpp"

using namespace grsdual;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   x%.2f   %s\n", name, serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  // Minimum-weight enumeration: all q^k codewords of a [10,5] code over GF(25).
  {
    FieldPtr F = build_field(5, 2);
    std::vector<FieldElement> pts;
    for (uint32_t i = 0; i < 10; ++i) pts.push_back(F->element_at(i));
    ScalingVector v(F, std::vector<FieldElement>(10, F->one()));
    GrsCode code = make_code(F, 5, EvaluationSet::finite(F, pts), v);
    size_t ds = 0, dp = 0;
    double ts = time_ms([&] { ds = kernels::min_weight_serial(code.generator()); });
    double tp = time_ms([&] { dp = kernels::min_weight_parallel(code.generator()); });
    report("min weight [10,5] q=25", ts, tp, ds == dp);
  }

  // Exhaustive minor scan: all C(16,8) = 12870 maximal minors over GF(81).
  {
    FieldPtr F = build_field(3, 4);
    std::vector<FieldElement> pts;
    for (uint32_t i = 0; i < 16; ++i) pts.push_back(F->element_at(i));
    ScalingVector v(F, std::vector<FieldElement>(16, F->one()));
    GrsCode code = make_code(F, 8, EvaluationSet::finite(F, pts), v);
    kernels::MinorScan ss, sp;
    double ts = time_ms([&] { ss = kernels::scan_minors_exhaustive_serial(code.generator()); });
    double tp = time_ms([&] { sp = kernels::scan_minors_exhaustive_parallel(code.generator()); });
    report("exhaustive minors [16,8]", ts, tp,
           ss.tested == sp.tested && ss.singular == sp.singular);
  }

  // Sampled minor scan: 4000 seeded 78x78 minors of the [156,78] code.
  {
    FieldPtr F = build_field_q(529);
    GrsCode code = coset_code(F, make_params(529, 1, "i", 12, 13));
    kernels::MinorScan ss, sp;
    double ts = time_ms(
        [&] { ss = kernels::scan_minors_sampled_serial(code.generator(), 4000, 1); });
    double tp = time_ms(
        [&] { sp = kernels::scan_minors_sampled_parallel(code.generator(), 4000, 1); });
    report("sampled minors [156,78]", ts, tp,
           ss.tested == sp.tested && ss.singular == sp.singular);
  }

  return 0;
}
