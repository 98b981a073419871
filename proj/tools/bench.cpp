// Serial reference vs OpenMP kernels on fixed workloads. Each row checks that
// both versions agree before reporting times.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "immsnp/immanant.hpp"
#include "immsnp/json_io.hpp"
#include "immsnp/newton.hpp"
#include "immsnp/scan.hpp"

using namespace immsnp;

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-40s %10.3f %10.3f %8.2fx  %s\n", name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-40s %10s %10s %9s\n", "workload", "serial s", "openmp s", "speedup");
  int failures = 0;

  {
    PolynomialMatrix h = jt_matrix(SkewShape(Partition{4, 4, 3, 3, 2, 2, 1}, Partition{3, 2, 2, 1, 1}), 3);
    ClassSums a, b;
    double s = seconds([&] { a = class_sums_reference(h); });
    double p = seconds([&] { b = class_sums(h); });
    row("class sums, JT order 7, 3 vars", s, p, a == b);
    failures += a != b;
  }
  {
    PolynomialMatrix h = jt_matrix(SkewShape(Partition{3, 3, 2, 2}, Partition{1}), 4);
    SparsePolynomial f = immanant(h, Partition{3, 1});
    SnpReport a, b;
    double s = seconds([&] { a = snp_check(f, {SnpPath::General, false}); });
    double p = seconds([&] { b = snp_check(f, {SnpPath::General, true}); });
    bool agree = a.is_snp == b.is_snp && a.missing_points == b.missing_points && a.lattice_point_count == b.lattice_point_count;
    row("hull membership, Imm_(3,1) H, 4 vars", s, p, agree);
    failures += !agree;
  }
  {
    ScanConfig cfg;
    cfg.max_size = 5;
    cfg.max_rows = 3;
    cfg.vars_list = {2, 3};
    ScanReport a, b;
    cfg.parallelism = 1;
    double s = seconds([&] { a = scan_conjecture1(cfg); });
    cfg.parallelism = 0;
    double p = seconds([&] { b = scan_conjecture1(cfg); });
    a.config.parallelism = b.config.parallelism = 0;
    bool agree = to_json(a).dump() == to_json(b).dump();
    row("JT immanant scan |lambda|<=5, rows<=3", s, p, agree);
    failures += !agree;
  }
  return failures == 0 ? 0 : 1;
}
