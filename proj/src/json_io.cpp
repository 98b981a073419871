#include "immsnp/json_io.hpp"

#include <cctype>

namespace immsnp {

std::vector<int> parse_int_list(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error("unbalanced brackets in '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw Error("empty entry in '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw Error("not an integer: '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

Json to_json(const Partition& p) { return Json(p.parts()); }
Json to_json(const Composition& c) { return Json(c.parts()); }
Json to_json(const ExponentVector& e) { return Json(e.to_vector()); }

Json to_json(const SkewShape& s) {
  Json j;
  j["outer"] = to_json(s.outer());
  j["inner"] = to_json(s.inner());
  return j;
}

Json to_json(const SparsePolynomial& f) {
  Json j;
  j["nvars"] = f.nvars();
  Json terms = Json::array();
  for (const Term& t : f.terms()) terms.push_back(Json::array({to_json(t.exponent), t.coeff.get_str()}));
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const SnpReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["nvars"] = r.nvars;
  j["degree"] = r.degree;
  j["homogeneous"] = r.homogeneous;
  j["support_size"] = r.support_size;
  j["lattice_point_count"] = r.lattice_point_count;
  j["is_snp"] = r.is_snp;
  Json missing = Json::array();
  for (const auto& e : r.missing_points) missing.push_back(to_json(e));
  j["missing_points"] = std::move(missing);
  Json top = Json::array();
  for (const auto& p : r.dominance_max) top.push_back(to_json(p));
  j["dominance_max"] = std::move(top);
  j["is_m_convex"] = r.is_m_convex;
  return j;
}

Json to_json(const PathFamily& f) {
  Json j;
  j["pi"] = f.pi.one_based();
  j["weight"] = to_json(f.weight);
  Json skel = Json::array();
  for (const SkeletonStep& s : f.skeleton) skel.push_back(Json::array({s.col, s.level, s.count}));
  j["skeleton"] = std::move(skel);
  return j;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

SkewShape skew_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("outer")) throw Error("skew shape must be an object with \"outer\"");
  Partition inner = j.contains("inner") ? partition_from_json(j["inner"]) : Partition{};
  return SkewShape(partition_from_json(j["outer"]), inner);
}

SparsePolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw Error("polynomial JSON needs \"nvars\" and \"terms\"");
  int nvars = j["nvars"].get<int>();
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2) throw Error("polynomial term must be [exponents, coefficient]");
    std::vector<int> e = t[0].get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars) throw Error("exponent length does not match nvars");
    mpz_class c;
    if (t[1].is_string()) {
      if (c.set_str(t[1].get<std::string>(), 10) != 0) throw Error("bad coefficient " + t[1].dump());
    } else if (t[1].is_number_integer()) {
      c = static_cast<long>(t[1].get<std::int64_t>());
    } else {
      throw Error("bad coefficient " + t[1].dump());
    }
    terms.push_back({ExponentVector(std::span<const int>(e)), c});
  }
  return SparsePolynomial::from_terms(nvars, std::move(terms));
}

}  // namespace immsnp
