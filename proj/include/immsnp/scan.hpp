#pragma once

// Exhaustive desk-scale scans. Each case is one (shape, nu, nvars) triple;
// results are assembled in enumeration order so reports are reproducible.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "immsnp/json_io.hpp"
#include "immsnp/newton.hpp"

namespace immsnp {

inline constexpr const char* kToolVersion = "0.1.0";

struct ScanConfig {
  std::string family = "jt";  // jt | giambelli | e-poly
  int max_size = 4;
  int max_rows = 2;
  std::vector<int> vars_list{2, 3};
  std::optional<std::vector<Partition>> nu_filter;
  int parallelism = 0;  // 0 lets the runtime decide
  std::string output_path;
  std::int64_t max_cases = 200000;
  bool cross_check = false;  // also run the general hull path when the fast path applies

  void validate() const;
};

struct ScanCase {
  SkewShape shape;
  Partition nu;  // theta for e-poly scans
  int nvars = 0;
  bool vanishing = false;  // zero polynomial: nothing to check
  std::optional<SnpReport> snp;
  Json checks = Json::object();  // scan-specific verdicts
  bool counterexample = false;
};

struct ScanReport {
  std::string scan;
  ScanConfig config;
  std::vector<ScanCase> cases;
  bool complete = true;
  std::string incomplete_reason;
  double wall_seconds = 0;

  std::size_t counterexample_count() const;
  // 0 all verified, 2 counterexample found, 1 incomplete.
  int exit_code() const;
};

// Every immanant of every Jacobi-Trudi matrix in range.
ScanReport scan_conjecture1(const ScanConfig& config);
// Giambelli immanants, with the leading coefficient compared to prod nu_i!.
ScanReport scan_giambelli_theorem(const ScanConfig& config);
// Permanents (full support) and (n-1,1) immanants of border strips.
ScanReport scan_jt_theorem(const ScanConfig& config);
// E^theta for border strips by both formulas, and SNP of the nonzero ones.
ScanReport scan_e_poly(const ScanConfig& config);

Json to_json(const ScanConfig& c);
Json to_json(const ScanCase& c);
Json to_json(const ScanReport& r, bool include_timing = false);

}  // namespace immsnp
