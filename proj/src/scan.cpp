#include "immsnp/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "immsnp/characters.hpp"
#include "immsnp/immanant.hpp"
#include "immsnp/networks.hpp"
#include "immsnp/stanley_stembridge.hpp"
#include "immsnp/symmetric.hpp"

namespace immsnp {

void ScanConfig::validate() const {
  if (family != "jt" && family != "giambelli" && family != "e-poly")
    throw Error("scan: unknown family '" + family + "'");
  if (max_size < 0) throw Error("scan: max_size must be non-negative");
  if (max_rows < 1) throw Error("scan: max_rows must be positive");
  if (vars_list.empty()) throw Error("scan: empty variable list");
  for (int v : vars_list)
    if (v < 1 || v > kMaxVars) throw Error("scan: variable count " + std::to_string(v) + " out of range");
  if (parallelism < 0) throw Error("scan: negative parallelism");
  if (max_cases < 1) throw Error("scan: max_cases must be positive");
}

std::size_t ScanReport::counterexample_count() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const ScanCase& c) { return c.counterexample; }));
}

int ScanReport::exit_code() const {
  if (!complete) return 1;
  return counterexample_count() > 0 ? 2 : 0;
}

namespace {

bool nu_allowed(const ScanConfig& cfg, const Partition& nu) {
  if (!cfg.nu_filter) return true;
  return std::find(cfg.nu_filter->begin(), cfg.nu_filter->end(), nu) != cfg.nu_filter->end();
}

// A job owns a contiguous run of cases that share expensive setup.
struct Job {
  std::size_t first;
  std::size_t last;  // exclusive
};

struct Plan {
  std::vector<ScanCase> cases;
  std::vector<Job> jobs;
  bool truncated = false;

  void open_job() { jobs.push_back({cases.size(), cases.size()}); }
  void add(ScanCase c) {
    cases.push_back(std::move(c));
    jobs.back().last = cases.size();
  }
};

void truncate(Plan& plan, std::int64_t max_cases) {
  std::size_t cap = static_cast<std::size_t>(max_cases);
  if (plan.cases.size() <= cap) return;
  plan.truncated = true;
  plan.cases.resize(cap);
  std::vector<Job> kept;
  for (Job j : plan.jobs) {
    if (j.first >= cap) break;
    j.last = std::min(j.last, cap);
    kept.push_back(j);
  }
  plan.jobs = std::move(kept);
}

ScanReport execute(const std::string& name, const ScanConfig& cfg, Plan plan,
                   const std::function<void(std::vector<ScanCase>&, const Job&)>& run) {
  auto t0 = std::chrono::steady_clock::now();
  truncate(plan, cfg.max_cases);
  std::vector<std::string> errors(plan.jobs.size());
  int threads = cfg.parallelism > 0 ? cfg.parallelism : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t j = 0; j < plan.jobs.size(); ++j) {
    try {
      run(plan.cases, plan.jobs[j]);
    } catch (const std::exception& e) {
      errors[j] = e.what();
    }
  }
  ScanReport r;
  r.scan = name;
  r.config = cfg;
  r.cases = std::move(plan.cases);
  if (plan.truncated) {
    r.complete = false;
    r.incomplete_reason = "case bound max_cases=" + std::to_string(cfg.max_cases) + " exceeded";
  }
  for (const std::string& e : errors)
    if (!e.empty()) {
      r.complete = false;
      r.incomplete_reason = e;
      break;
    }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Runs the SNP check on one case; a zero immanant is recorded as vanishing.
void check_snp(ScanCase& c, const SparsePolynomial& f, bool cross_check) {
  if (f.is_zero()) {
    c.vanishing = true;
    return;
  }
  c.snp = snp_check(f, SnpOptions{SnpPath::Auto, false});
  if (!c.snp->is_snp) c.counterexample = true;
  if (cross_check && c.snp->method == SnpMethod::FastPermutahedron) {
    SnpReport g = snp_check(f, SnpOptions{SnpPath::General, false});
    bool agree = g.is_snp == c.snp->is_snp && g.lattice_point_count == c.snp->lattice_point_count;
    c.checks["paths_agree"] = agree;
    if (!agree) c.counterexample = true;
  }
}

}  // namespace

ScanReport scan_conjecture1(const ScanConfig& cfg) {
  cfg.validate();
  Plan plan;
  for (const SkewShape& shape : enumerate_skew_shapes(cfg.max_size, cfg.max_rows))
    for (int l : cfg.vars_list) {
      plan.open_job();
      for (const Partition& nu : partitions_of(shape.rows()))
        if (nu_allowed(cfg, nu)) plan.add(ScanCase{shape, nu, l, false, std::nullopt, Json::object(), false});
    }
  return execute("conjecture1", cfg, std::move(plan), [&](std::vector<ScanCase>& cases, const Job& job) {
    if (job.first == job.last) return;
    const ScanCase& head = cases[job.first];
    ClassSums sums = class_sums(jt_matrix(head.shape, head.nvars));
    for (std::size_t i = job.first; i < job.last; ++i) {
      ScanCase& c = cases[i];
      SparsePolynomial imm = immanant_from_class_sums(sums, c.nu, c.nvars);
      bool sym = is_symmetric(imm);
      c.checks["symmetric"] = sym;
      if (!sym) c.counterexample = true;
      check_snp(c, imm, cfg.cross_check);
    }
  });
}

ScanReport scan_giambelli_theorem(const ScanConfig& cfg) {
  cfg.validate();
  Plan plan;
  for (int d = 1; d <= cfg.max_size; ++d)
    for (const Partition& lambda : enumerate_partitions(d, cfg.max_rows)) {
      plan.open_job();
      for (int l : cfg.vars_list)
        for (const Partition& nu : partitions_of(rank(lambda)))
          if (nu_allowed(cfg, nu))
            plan.add(ScanCase{SkewShape(lambda), nu, l, false, std::nullopt, Json::object(), false});
    }
  return execute("giambelli", cfg, std::move(plan), [&](std::vector<ScanCase>& cases, const Job& job) {
    if (job.first == job.last) return;
    const Partition& lambda = cases[job.first].shape.outer();
    std::map<Partition, Json> leading;
    std::map<int, ClassSums> sums;
    for (std::size_t i = job.first; i < job.last; ++i) {
      ScanCase& c = cases[i];
      auto it = sums.find(c.nvars);
      if (it == sums.end()) it = sums.emplace(c.nvars, class_sums(giambelli_matrix(lambda, c.nvars))).first;
      check_snp(c, immanant_from_class_sums(it->second, c.nu, c.nvars), cfg.cross_check);

      auto lt = leading.find(c.nu);
      if (lt == leading.end()) {
        Json rec;
        std::int64_t expected = young_subgroup_order(c.nu);
        try {
          LeadingTerm t = leading_coefficient(lambda, c.nu);
          rec["exponent"] = to_json(t.exponent);
          rec["coefficient"] = t.coefficient.get_str();
          rec["expected"] = std::to_string(expected);
          rec["ok"] = t.coefficient == mpz_class(static_cast<long>(expected));
        } catch (const ResourceBoundError&) {
          throw;
        } catch (const Error& e) {
          rec["error"] = e.what();
          rec["ok"] = false;
        }
        lt = leading.emplace(c.nu, std::move(rec)).first;
      }
      c.checks["leading"] = lt->second;
      if (!lt->second["ok"].get<bool>()) c.counterexample = true;
    }
  });
}

ScanReport scan_jt_theorem(const ScanConfig& cfg) {
  cfg.validate();
  Plan plan;
  for (const SkewShape& shape : enumerate_skew_shapes(cfg.max_size, cfg.max_rows))
    for (int l : cfg.vars_list) {
      plan.open_job();
      ScanCase c{shape, Partition{shape.rows()}, l, false, std::nullopt, Json::object(), false};
      c.checks["kind"] = "permanent";
      plan.add(std::move(c));
    }
  for (const SkewShape& shape : enumerate_border_strips(cfg.max_size, cfg.max_rows)) {
    int n = shape.rows();
    if (n < 2) continue;
    for (int l : cfg.vars_list) {
      plan.open_job();
      ScanCase c{shape, Partition{n - 1, 1}, l, false, std::nullopt, Json::object(), false};
      c.checks["kind"] = "border-strip";
      plan.add(std::move(c));
    }
  }
  return execute("jt-theorem", cfg, std::move(plan), [&](std::vector<ScanCase>& cases, const Job& job) {
    for (std::size_t i = job.first; i < job.last; ++i) {
      ScanCase& c = cases[i];
      PolynomialMatrix h = jt_matrix(c.shape, c.nvars);
      SparsePolynomial imm = immanant(h, c.nu);
      const int d = c.shape.size();
      if (c.checks["kind"] == "permanent") {
        std::vector<ExponentVector> all = exponents_of_degree(d, c.nvars);
        std::vector<ExponentVector> supp = support(imm);
        std::sort(all.begin(), all.end());
        std::sort(supp.begin(), supp.end());
        bool full = all == supp;
        c.checks["full_support"] = full;
        if (!full) c.counterexample = true;
      } else {
        std::int64_t expected = adjacent_product_character_sum(c.nu);
        bool ok = true;
        for (int j = 0; j < c.nvars; ++j) {
          ExponentVector e(c.nvars);
          e.set(j, d);
          if (imm.coefficient(e) != mpz_class(static_cast<long>(expected))) ok = false;
        }
        c.checks["pure_power_coefficient"] = std::to_string(expected);
        c.checks["pure_power_ok"] = ok;
        if (!ok) c.counterexample = true;
      }
      check_snp(c, imm, cfg.cross_check);
    }
  });
}

ScanReport scan_e_poly(const ScanConfig& cfg) {
  cfg.validate();
  Plan plan;
  for (const SkewShape& shape : enumerate_border_strips(cfg.max_size, cfg.max_rows)) {
    plan.open_job();
    for (int l : cfg.vars_list)
      for (const Partition& theta : partitions_of(shape.size()))
        if (nu_allowed(cfg, theta)) plan.add(ScanCase{shape, theta, l, false, std::nullopt, Json::object(), false});
  }
  return execute("e-poly", cfg, std::move(plan), [&](std::vector<ScanCase>& cases, const Job& job) {
    if (job.first == job.last) return;
    const SkewShape& shape = cases[job.first].shape;
    std::map<int, std::map<Partition, SparsePolynomial>> by_vars;
    for (std::size_t i = job.first; i < job.last; ++i) {
      ScanCase& c = cases[i];
      auto it = by_vars.find(c.nvars);
      if (it == by_vars.end()) it = by_vars.emplace(c.nvars, e_theta_all(shape, c.nvars, shape.size())).first;
      auto et = it->second.find(c.nu);
      SparsePolynomial def = et == it->second.end() ? SparsePolynomial(c.nvars) : et->second;
      SparsePolynomial border = e_theta_border_formula(shape, c.nu, c.nvars);
      bool equal = def == border;
      c.checks["formulas_agree"] = equal;
      if (!equal) c.counterexample = true;
      auto expansion = e_theta_p_expansion(shape, c.nu);
      if (!expansion.empty()) {
        Composition finest(std::vector<int>(static_cast<std::size_t>(shape.rows()), 1));
        auto f = expansion.find(finest);
        bool ok = f != expansion.end() && f->second > 0;
        c.checks["finest_meld_positive"] = ok;
        if (!ok) c.counterexample = true;
      }
      check_snp(c, def, cfg.cross_check);
    }
  });
}

Json to_json(const ScanConfig& c) {
  Json j;
  j["family"] = c.family;
  j["max_size"] = c.max_size;
  j["max_rows"] = c.max_rows;
  j["vars_list"] = c.vars_list;
  if (c.nu_filter) {
    Json f = Json::array();
    for (const Partition& p : *c.nu_filter) f.push_back(to_json(p));
    j["nu_filter"] = std::move(f);
  } else {
    j["nu_filter"] = nullptr;
  }
  j["parallelism"] = c.parallelism;
  j["max_cases"] = c.max_cases;
  j["cross_check"] = c.cross_check;
  j["output_path"] = c.output_path;
  return j;
}

Json to_json(const ScanCase& c) {
  Json j;
  j["shape"] = to_json(c.shape);
  j["nu"] = to_json(c.nu);
  j["nvars"] = c.nvars;
  j["vanishing"] = c.vanishing;
  j["snp"] = c.snp ? to_json(*c.snp) : Json(nullptr);
  j["checks"] = c.checks;
  j["counterexample"] = c.counterexample;
  return j;
}

Json to_json(const ScanReport& r, bool include_timing) {
  Json j;
  j["tool"] = "immsnp";
  j["version"] = kToolVersion;
  j["scan"] = r.scan;
  j["config"] = to_json(r.config);
  j["complete"] = r.complete;
  if (!r.complete) j["incomplete_reason"] = r.incomplete_reason;
  std::size_t snp = 0, vanishing = 0;
  Json cases = Json::array(), counter = Json::array();
  for (const ScanCase& c : r.cases) {
    if (c.vanishing) ++vanishing;
    if (c.snp && c.snp->is_snp) ++snp;
    cases.push_back(to_json(c));
    if (c.counterexample) counter.push_back(cases.back());
  }
  j["totals"] = {{"cases", r.cases.size()},
                 {"snp", snp},
                 {"vanishing", vanishing},
                 {"counterexamples", counter.size()}};
  j["counterexamples"] = std::move(counter);
  j["cases"] = std::move(cases);
  if (include_timing) j["wall_time_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace immsnp
