#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "largeset/estimate.hpp"
#include "largeset/incidence.hpp"
#include "largeset/lattice.hpp"
#include "largeset/norms.hpp"
#include "largeset/oracles.hpp"
#include "largeset/params.hpp"
#include "largeset/search.hpp"
#include "largeset/verify.hpp"

namespace largeset {

using Json = nlohmann::ordered_json;

// Scalar conventions, used by every report:
//  - integers: JSON number when they fit in int64, decimal string otherwise
//  - rationals: "p/q" string ("p" when the denominator is 1)
//  - floats: JSON number rounded to 15 significant digits (non-finite -> null)
Json json_of_int(const Int& v);
Json json_of_rat(const Rat& v);
Json json_of_double(double v);

// Parses `text` (or a whole file) as JSON; Parse error on malformed input.
Json parse_json_text(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);

// File schemas.  Blocks must be strictly increasing with elements in [1,n];
// violations raise Parse errors naming the position, e.g. "$.blocks[3][2]".
Design design_from_json(const Json& j);
LargeSetPartition large_set_from_json(const Json& j);
std::vector<std::vector<std::int64_t>> matrix_from_json(const Json& j);

Json to_json(const Design& d);
Json to_json(const LargeSetPartition& ls);
Json to_json(const DivisibilityReport& r);
Json to_json(const Counterexample& c);
Json to_json(const VerificationReport& r);
Json to_json(const NormReport& r);
Json to_json(const MonteCarloResult& r);
Json to_json(const ExactHitResult& r);
Json to_json(const EstimateReport& r);
Json to_json(const SearchOutcome& r);
Json to_json(const DisjointDesignsResult& r);

// Assembled lattice summary for one system: basis, rank, determinant and
// divisibility parameter when full rank, dual basis, and the colsum/l
// membership verdict when `l` is given.  Requesting the verdict on a
// rank-deficient system raises NotFullRank.
Json lattice_report_json(const IncidenceSystem& sys, std::optional<int> l);

// CSV with header `first,last,hits`, one row per trial chunk.
std::string monte_carlo_csv(const MonteCarloResult& r);

}  // namespace largeset
