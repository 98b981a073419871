// Command-line front end: single computations and exhaustive scans.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "immsnp/characters.hpp"
#include "immsnp/immanant.hpp"
#include "immsnp/json_io.hpp"
#include "immsnp/networks.hpp"
#include "immsnp/newton.hpp"
#include "immsnp/scan.hpp"
#include "immsnp/stanley_stembridge.hpp"
#include "immsnp/strips.hpp"
#include "immsnp/symmetric.hpp"

using namespace immsnp;

namespace {

struct ShapeArgs {
  std::string family = "jt";
  std::string outer;
  std::string inner;
  std::string nu;
  int vars = 3;
  std::string out = "json";
};

void add_shape_options(CLI::App* cmd, ShapeArgs& a, bool need_nu) {
  cmd->add_option("--family", a.family, "jt (Jacobi-Trudi matrix of outer/inner) or giambelli (Giambelli matrix of outer)")
      ->check(CLI::IsMember({"jt", "giambelli"}))
      ->capture_default_str();
  cmd->add_option("--outer", a.outer, "outer partition, e.g. 6,6,4,4,1,1")->required();
  cmd->add_option("--inner", a.inner, "inner partition (jt only; default empty)");
  auto* nu = cmd->add_option("--nu", a.nu, "partition indexing the immanant character");
  if (need_nu) nu->required();
  cmd->add_option("--vars", a.vars, "number of variables")->envname("IMMSNP_VARS")->capture_default_str();
  cmd->add_option("--out", a.out, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

PolynomialMatrix build_matrix(const ShapeArgs& a) {
  if (a.family == "giambelli") {
    if (!a.inner.empty() && !parse_partition(a.inner).empty()) throw Error("--inner is not used with --family giambelli");
    return giambelli_matrix(parse_partition(a.outer), a.vars);
  }
  return jt_matrix(SkewShape(parse_partition(a.outer), parse_partition(a.inner)), a.vars);
}

Json shape_json(const ShapeArgs& a) {
  Json j;
  j["family"] = a.family;
  j["outer"] = to_json(parse_partition(a.outer));
  j["inner"] = to_json(parse_partition(a.inner));
  j["vars"] = a.vars;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_snp_text(const SnpReport& r) {
  std::cout << "method: " << to_string(r.method) << "\n"
            << "degree: " << r.degree << (r.homogeneous ? "" : " (inhomogeneous)") << "\n"
            << "support: " << r.support_size << "\n"
            << "lattice points: " << r.lattice_point_count << "\n"
            << "SNP: " << (r.is_snp ? "yes" : "no") << "\n"
            << "M-convex support: " << (r.is_m_convex ? "yes" : "no") << "\n";
  for (const auto& e : r.missing_points) std::cout << "missing " << e.to_string() << "\n";
}

struct ScanArgs {
  ScanConfig cfg;
  std::vector<std::string> nus;
  std::string vars = "2,3";
  std::string out;
  bool timing = false;
};

void add_scan_options(CLI::App* cmd, ScanArgs& s, int default_size, int default_rows) {
  s.cfg.max_size = default_size;
  s.cfg.max_rows = default_rows;
  cmd->add_option("--max-size", s.cfg.max_size, "largest partition size")->envname("IMMSNP_MAX_SIZE")->capture_default_str();
  cmd->add_option("--max-rows", s.cfg.max_rows, "largest number of rows")->envname("IMMSNP_MAX_ROWS")->capture_default_str();
  cmd->add_option("--vars", s.vars, "comma-separated variable counts")->envname("IMMSNP_VARS")->capture_default_str();
  cmd->add_option("--nu", s.nus, "restrict to these partitions (repeatable)");
  cmd->add_option("--jobs", s.cfg.parallelism, "worker threads (0 = runtime default)")->envname("IMMSNP_JOBS");
  cmd->add_option("--max-cases", s.cfg.max_cases, "case bound; exceeding it marks the report incomplete")
      ->envname("IMMSNP_MAX_CASES")
      ->capture_default_str();
  cmd->add_flag("--cross-check", s.cfg.cross_check, "also run the general hull path where the permutahedron path applies");
  cmd->add_option("--out", s.out, "report file (default: standard output)");
  cmd->add_flag("--timing", s.timing, "include wall time in the report (breaks byte-for-byte reproducibility)");
}

int finish_scan(const ScanReport& r, const ScanArgs& s) {
  Json j = to_json(r, s.timing);
  if (s.out.empty()) {
    emit(j);
  } else {
    std::ofstream f(s.out);
    if (!f) throw Error("cannot write " + s.out);
    f << j.dump(2) << "\n";
  }
  std::cerr << r.scan << ": " << r.cases.size() << " cases, " << r.counterexample_count() << " counterexamples"
            << (r.complete ? "" : ", INCOMPLETE: " + r.incomplete_reason) << "\n";
  return r.exit_code();
}

ScanConfig prepare(ScanArgs& s, const std::string& family) {
  s.cfg.family = family;
  s.cfg.vars_list = parse_int_list(s.vars);
  s.cfg.output_path = s.out;
  if (!s.nus.empty()) {
    std::vector<Partition> f;
    for (const auto& n : s.nus) f.push_back(parse_partition(n));
    s.cfg.nu_filter = f;
  }
  return s.cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact immanants of Jacobi-Trudi and Giambelli matrices, saturated Newton polytope checks, "
               "symmetric group characters and lattice-path networks."};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for single computations (0 = runtime default)")->envname("IMMSNP_JOBS");

  ShapeArgs imm_args;
  auto* imm = app.add_subcommand("imm", "Immanant Imm_nu of a Jacobi-Trudi matrix H(outer,inner) = (h_{(outer_i-i)-(inner_j-j)}) "
                                        "or a Giambelli matrix G = (s_{(a_i|b_j)}). nu=(1^n) gives the determinant, nu=(n) the permanent.");
  add_shape_options(imm, imm_args, true);

  ShapeArgs snp_args;
  std::string poly_input;
  bool force_general = false;
  auto* snp = app.add_subcommand("snp", "Saturated Newton polytope check: is every lattice point of conv(supp f) in supp f? "
                                        "Checks either --poly or the immanant described by the shape options.");
  snp_args.family = "jt";
  snp->add_option("--poly", poly_input, "polynomial JSON (inline or a file path)");
  snp->add_option("--family", snp_args.family, "jt or giambelli")->check(CLI::IsMember({"jt", "giambelli"}));
  snp->add_option("--outer", snp_args.outer, "outer partition");
  snp->add_option("--inner", snp_args.inner, "inner partition");
  snp->add_option("--nu", snp_args.nu, "immanant partition");
  snp->add_option("--vars", snp_args.vars, "number of variables")->envname("IMMSNP_VARS")->capture_default_str();
  snp->add_option("--out", snp_args.out, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  snp->add_flag("--general", force_general, "skip the permutahedron shortcut and test every candidate by exact hull membership");

  std::string char_nu;
  int char_n = 0;
  auto* chr = app.add_subcommand("char", "Irreducible characters chi^nu(rho) of S_n by the Murnaghan-Nakayama rule, "
                                         "as {nu, rho, value} triples over all classes rho.");
  chr->add_option("--n", char_n, "emit the whole character table of S_n");
  chr->add_option("--nu", char_nu, "emit one row of the table");

  ShapeArgs path_args;
  bool dump = false;
  EnumerationLimits limits;
  auto* paths = app.add_subcommand("paths", "Lattice-path families of the Jacobi-Trudi (Greene) or Giambelli network. Reports "
                                            "family counts, skeleton grouping into products of interval symmetric groups and, "
                                            "with --nu, compares sum_F chi^nu(pi_F) x^F against the immanant.");
  add_shape_options(paths, path_args, false);
  paths->add_flag("--dump", dump, "emit every family as {pi, weight, skeleton}");
  paths->add_option("--max-families", limits.max_families, "family count bound")->capture_default_str();

  std::string e_outer, e_inner, e_theta;
  int yvars = 2;
  bool e_scan = false;
  ScanArgs e_scan_args;
  auto* epoly = app.add_subcommand("e-poly", "Coefficient E^theta(y) of s_theta(x) in sum_nu s_nu(y) Imm_nu H(x), computed from the "
                                             "definition and from the border-strip formula sum_alpha K_{theta,gamma|alpha} p_alpha(y).");
  epoly->add_option("--outer", e_outer, "outer partition");
  epoly->add_option("--inner", e_inner, "inner partition");
  epoly->add_option("--theta", e_theta, "partition of the number of boxes");
  epoly->add_option("--yvars", yvars, "number of y variables")->capture_default_str();
  epoly->add_flag("--scan", e_scan, "scan all border strips in range instead of a single case");
  add_scan_options(epoly, e_scan_args, 4, 4);

  ScanArgs c1_args, g_args, jt_args;
  auto* c1 = app.add_subcommand("scan-conjecture1", "Check every immanant of every Jacobi-Trudi matrix in range for SNP "
                                                    "(conjectured to always hold). Exit 2 on a counterexample.");
  add_scan_options(c1, c1_args, 4, 2);
  auto* gs = app.add_subcommand("scan-giambelli", "Check every immanant of every Giambelli matrix in range for SNP and compare its "
                                                  "dominance-largest coefficient with prod nu_i!.");
  add_scan_options(gs, g_args, 6, 6);
  auto* jts = app.add_subcommand("scan-jt-theorem", "Permanents of Jacobi-Trudi matrices (support is every monomial of the degree) and "
                                                    "(n-1,1) immanants of border strips (SNP, pure powers carry the adjacent-product "
                                                    "character sum). Border strips are bounded by the number of boxes.");
  add_scan_options(jts, jt_args, 5, 3);

  std::string rado_mu, rado_lambda;
  int rado_max = 5, rado_vars = 0;
  auto* rado = app.add_subcommand("rado-check", "Lattice points of P_mu inside those of P_lambda iff mu is dominated by lambda, "
                                                "with containment decided by exact hull membership.");
  rado->add_option("--mu", rado_mu, "single pair: the smaller partition");
  rado->add_option("--lambda", rado_lambda, "single pair: the larger partition");
  rado->add_option("--vars", rado_vars, "single pair: number of variables (default |lambda|)");
  rado->add_option("--max-size", rado_max, "all pairs of partitions of d <= max-size at d variables")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (*imm) {
      SparsePolynomial f = immanant(build_matrix(imm_args), parse_partition(imm_args.nu));
      if (imm_args.out == "text") {
        std::cout << f.to_string() << "\n";
      } else {
        Json j;
        j["input"] = shape_json(imm_args);
        j["nu"] = to_json(parse_partition(imm_args.nu));
        j["polynomial"] = to_json(f);
        emit(j);
      }
      return 0;
    }
    if (*snp) {
      SparsePolynomial f;
      if (!poly_input.empty()) {
        std::string text = poly_input;
        if (text.find('{') == std::string::npos) {
          std::ifstream in(poly_input);
          if (!in) throw Error("cannot read " + poly_input);
          std::stringstream ss;
          ss << in.rdbuf();
          text = ss.str();
        }
        f = polynomial_from_json(Json::parse(text));
      } else {
        if (snp_args.outer.empty() || snp_args.nu.empty()) throw Error("snp needs --poly or --outer and --nu");
        f = immanant(build_matrix(snp_args), parse_partition(snp_args.nu));
      }
      SnpReport r = snp_check(f, SnpOptions{force_general ? SnpPath::General : SnpPath::Auto, true});
      if (snp_args.out == "text")
        print_snp_text(r);
      else
        emit(to_json(r));
      return 0;
    }
    if (*chr) {
      std::vector<Partition> rows;
      int n = char_n;
      if (!char_nu.empty()) {
        rows.push_back(parse_partition(char_nu));
        n = rows.front().size();
      } else {
        if (n < 1) throw Error("char needs --n or --nu");
        rows = partitions_of(n);
      }
      auto table = CharacterTable::get(n);
      Json out = Json::array();
      for (const Partition& nu : rows)
        for (const Partition& rho : partitions_of(n))
          out.push_back({{"nu", to_json(nu)}, {"rho", to_json(rho)}, {"value", (*table)(nu, rho)}});
      emit(out);
      return 0;
    }
    if (*paths) {
      PlanarNetwork net = path_args.family == "giambelli"
                              ? giambelli_network(parse_partition(path_args.outer), path_args.vars)
                              : greene_network(SkewShape(parse_partition(path_args.outer), parse_partition(path_args.inner)),
                                               path_args.vars);
      auto families = enumerate_path_families(net, limits);
      SkeletonReport skel = skeleton_groups(families);
      Json j;
      j["input"] = shape_json(path_args);
      j["starts"] = net.starts();
      j["ends"] = net.ends();
      j["family_count"] = families.size();
      j["skeleton_count"] = skel.groups.size();
      j["skeleton_failures"] = skel.failures;
      if (!path_args.nu.empty()) {
        Partition nu = parse_partition(path_args.nu);
        bool match = family_sum(families, nu, path_args.vars) == immanant(build_matrix(path_args), nu);
        j["nu"] = to_json(nu);
        j["family_sum_matches_immanant"] = match;
      }
      if (dump) {
        Json fs = Json::array();
        for (const PathFamily& f : families) fs.push_back(to_json(f));
        j["families"] = std::move(fs);
      }
      if (path_args.out == "text") {
        std::cout << "families: " << families.size() << "\nskeletons: " << skel.groups.size()
                  << "\nunverified skeletons: " << skel.failures << "\n";
        if (j.contains("family_sum_matches_immanant"))
          std::cout << "family sum matches immanant: " << (j["family_sum_matches_immanant"].get<bool>() ? "yes" : "no") << "\n";
      } else {
        emit(j);
      }
      return skel.failures == 0 ? 0 : 2;
    }
    if (*epoly) {
      if (e_scan) return finish_scan(scan_e_poly(prepare(e_scan_args, "e-poly")), e_scan_args);
      if (e_outer.empty() || e_theta.empty()) throw Error("e-poly needs --outer and --theta (or --scan)");
      SkewShape shape(parse_partition(e_outer), parse_partition(e_inner));
      Partition theta = parse_partition(e_theta);
      SparsePolynomial def = e_theta_definition(shape, theta, yvars, shape.size());
      SparsePolynomial border = e_theta_border_formula(shape, theta, yvars);
      Json j;
      j["shape"] = to_json(shape);
      j["theta"] = to_json(theta);
      j["yvars"] = yvars;
      j["definition"] = to_json(def);
      j["border_formula"] = to_json(border);
      j["equal"] = def == border;
      emit(j);
      return def == border ? 0 : 2;
    }
    if (*c1) return finish_scan(scan_conjecture1(prepare(c1_args, "jt")), c1_args);
    if (*gs) return finish_scan(scan_giambelli_theorem(prepare(g_args, "giambelli")), g_args);
    if (*jts) return finish_scan(scan_jt_theorem(prepare(jt_args, "jt")), jt_args);
    if (*rado) {
      Json j;
      std::size_t pairs = 0, mismatches = 0;
      Json bad = Json::array();
      auto check = [&](const Partition& mu, const Partition& lambda, int nvars) {
        bool hull = rado_containment(mu, lambda, nvars);
        bool dom = dominance_leq(mu, lambda);
        ++pairs;
        if (hull != dom) {
          ++mismatches;
          bad.push_back({{"mu", to_json(mu)}, {"lambda", to_json(lambda)}, {"hull", hull}, {"dominance", dom}});
        }
        return hull;
      };
      if (!rado_mu.empty() || !rado_lambda.empty()) {
        Partition mu = parse_partition(rado_mu), lambda = parse_partition(rado_lambda);
        int nvars = rado_vars > 0 ? rado_vars : lambda.size();
        j["contained"] = check(mu, lambda, nvars);
      } else {
        for (int d = 1; d <= rado_max; ++d)
          for (const Partition& mu : partitions_of(d))
            for (const Partition& lambda : partitions_of(d)) check(mu, lambda, d);
      }
      j["pairs"] = pairs;
      j["mismatches"] = mismatches;
      j["failures"] = std::move(bad);
      emit(j);
      return mismatches == 0 ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
