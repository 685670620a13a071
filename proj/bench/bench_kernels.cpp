// Wall-clock comparison of the OpenMP kernels with their serial references.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <algorithm>

#include "wloc/localization.hpp"
#include "wloc/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double best_ms(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double par, double ser) {
  std::printf("%-28s %10.2f %10.2f %7.2fx\n", name.c_str(), par, ser, ser / par);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::stoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %10s %10s %8s\n", "kernel", "par ms", "serial ms", "speedup");

  const auto Q = wloc::FieldDescriptor::rationals();
  for (auto [m, amb, n] : {std::tuple{2, 8, 4}, {4, 8, 4}, {4, 9, 4}, {5, 9, 4}}) {
    auto p = wloc::build_grassmannian_problem(m, amb, n, Q);
    std::string name = "residue Gr(" + std::to_string(m) + "," + std::to_string(amb) + ")";
    row(name, best_ms(reps, [&] { wloc::bott_residue(p); }), best_ms(reps, [&] { wloc::bott_residue_serial(p); }));
  }
  for (long prime : {7L, 11L}) {
    std::string name = "witt-fp F" + std::to_string(prime) + " rank<=5";
    row(name, best_ms(reps, [&] { wloc::witt_fp_sweep(prime, 5); }),
        best_ms(reps, [&] { wloc::witt_fp_sweep_serial(prime, 5); }));
  }
  return 0;
}
