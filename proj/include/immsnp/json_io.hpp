#pragma once

// JSON encodings shared by the command-line tool and the scan reports.
//
// Polynomial: {"nvars": n, "terms": [[[e_1, ..., e_n], "coeff"], ...]} in
// canonical term order; coefficients are decimal strings.
// Partition: array of parts. Skew shape: {"outer": [...], "inner": [...]}.

#include <string>

#include "json.hpp"

#include "immsnp/combinatorics.hpp"
#include "immsnp/networks.hpp"
#include "immsnp/newton.hpp"
#include "immsnp/polynomial.hpp"

namespace immsnp {

using Json = nlohmann::ordered_json;

// "6,6,4,4,1,1", "[6,6,4,4,1,1]", "" and "[]" are accepted.
Partition parse_partition(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const Partition& p);
Json to_json(const Composition& c);
Json to_json(const ExponentVector& e);
Json to_json(const SkewShape& s);
Json to_json(const SparsePolynomial& f);
Json to_json(const SnpReport& r);
Json to_json(const PathFamily& f);

Partition partition_from_json(const Json& j);
SkewShape skew_from_json(const Json& j);
SparsePolynomial polynomial_from_json(const Json& j);

}  // namespace immsnp
