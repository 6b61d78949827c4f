#include "largeset/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "largeset/errors.hpp"

namespace largeset {

namespace {

[[noreturn]] void jfail(const std::string& where, const std::string& msg) {
  fail(ErrorKind::Parse, where + ": " + msg);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) jfail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) jfail(where, std::string("missing required key \"") + key + "\"");
  return *it;
}

std::int64_t get_i64(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const std::uint64_t u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) jfail(where, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  if (!j.is_number_integer()) jfail(where, "expected an integer");
  return j.get<std::int64_t>();
}

int get_bounded(const Json& j, const std::string& where, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = get_i64(j, where);
  if (v < lo || v > hi)
    jfail(where, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return static_cast<int>(v);
}

// big integers may arrive as decimal strings
Int get_big(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      jfail(where, "not a decimal integer string");
    }
  }
  return Int(get_i64(j, where));
}

KSet parse_block(const Json& j, const std::string& where, int n) {
  if (!j.is_array()) jfail(where, "expected an array of integers");
  KSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ep = where + "[" + std::to_string(i) + "]";
    const std::int64_t x = get_i64(j[i], ep);
    if (x < 1 || x > n) jfail(ep, "element " + std::to_string(x) + " outside [1, n]");
    if (!s.empty() && x <= s.back()) jfail(ep, "elements must be strictly increasing");
    s.push_back(static_cast<int>(x));
  }
  return s;
}

Json blocks_to_json(const std::vector<KSet>& blocks) {
  Json a = Json::array();
  for (const KSet& b : blocks) a.push_back(b);
  return a;
}

Json to_json(const ThresholdCheck& c) {
  Json j;
  j["holds"] = c.holds;
  j["logLhs"] = json_of_double(c.log_lhs);
  j["logRhs"] = json_of_double(c.log_rhs);
  return j;
}

}  // namespace

Json json_of_int(const Int& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.str();
}

Json json_of_rat(const Rat& v) { return rat_string(v); }

Json json_of_double(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::stod(buf);
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, source + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

Design design_from_json(const Json& j) {
  Design d;
  d.n = get_bounded(need(j, "n", "$"), "$.n", 1, INT32_MAX);
  d.k = get_bounded(need(j, "k", "$"), "$.k", 1, INT32_MAX);
  d.t = get_bounded(need(j, "t", "$"), "$.t", 1, INT32_MAX);
  d.lambda = get_big(need(j, "lambda", "$"), "$.lambda");
  const Json& jb = need(j, "blocks", "$");
  if (!jb.is_array()) jfail("$.blocks", "expected an array");
  for (std::size_t i = 0; i < jb.size(); ++i)
    d.blocks.push_back(parse_block(jb[i], "$.blocks[" + std::to_string(i) + "]", d.n));
  return d;
}

LargeSetPartition large_set_from_json(const Json& j) {
  LargeSetPartition ls;
  ls.n = get_bounded(need(j, "n", "$"), "$.n", 1, INT32_MAX);
  ls.k = get_bounded(need(j, "k", "$"), "$.k", 1, INT32_MAX);
  ls.t = get_bounded(need(j, "t", "$"), "$.t", 1, INT32_MAX);
  ls.l = get_i64(need(j, "l", "$"), "$.l");
  if (ls.l < 1) jfail("$.l", "l must be >= 1");
  const Json& jp = need(j, "parts", "$");
  if (!jp.is_array()) jfail("$.parts", "expected an array");
  for (std::size_t p = 0; p < jp.size(); ++p) {
    const std::string pp = "$.parts[" + std::to_string(p) + "]";
    if (!jp[p].is_array()) jfail(pp, "expected an array of blocks");
    std::vector<KSet> part;
    for (std::size_t i = 0; i < jp[p].size(); ++i)
      part.push_back(parse_block(jp[p][i], pp + "[" + std::to_string(i) + "]", ls.n));
    ls.parts.push_back(std::move(part));
  }
  return ls;
}

std::vector<std::vector<std::int64_t>> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) jfail("$", "expected a nonempty array of rows");
  std::vector<std::vector<std::int64_t>> m;
  std::size_t width = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = "$[" + std::to_string(r) + "]";
    if (!j[r].is_array()) jfail(rp, "expected an array of integers");
    std::vector<std::int64_t> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(get_i64(j[r][c], rp + "[" + std::to_string(c) + "]"));
    if (r == 0)
      width = row.size();
    else if (row.size() != width)
      jfail(rp, "expected " + std::to_string(width) + " columns, got " +
                    std::to_string(row.size()));
    m.push_back(std::move(row));
  }
  if (width == 0) jfail("$[0]", "rows must be nonempty");
  return m;
}

Json to_json(const Design& d) {
  Json j;
  j["n"] = d.n;
  j["k"] = d.k;
  j["t"] = d.t;
  j["lambda"] = json_of_int(d.lambda);
  j["blocks"] = blocks_to_json(d.blocks);
  return j;
}

Json to_json(const LargeSetPartition& ls) {
  Json j;
  j["n"] = ls.n;
  j["k"] = ls.k;
  j["t"] = ls.t;
  j["l"] = ls.l;
  Json parts = Json::array();
  for (const auto& p : ls.parts) parts.push_back(blocks_to_json(p));
  j["parts"] = parts;
  return j;
}

Json to_json(const DivisibilityReport& r) {
  Json j;
  j["pass"] = r.pass;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["s"] = c.s;
    cj["divisor"] = json_of_int(c.divisor);
    cj["dividend"] = json_of_int(c.dividend);
    cj["pass"] = c.pass;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const Counterexample& c) {
  Json j;
  j["kind"] = counterexample_kind_name(c.kind);
  if (!c.witness.empty()) j["witness"] = c.witness;
  switch (c.kind) {
    case CounterexampleKind::CoverageMismatch:
    case CounterexampleKind::PartCountMismatch:
    case CounterexampleKind::UniformityMismatch:
      j["expected"] = json_of_int(c.expected);
      j["actual"] = json_of_int(c.actual);
      break;
    default:
      break;
  }
  if (c.part >= 0) j["part"] = c.part;
  if (c.other_part >= 0) j["otherPart"] = c.other_part;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
  return j;
}

Json to_json(const NormReport& r) {
  Json j;
  j["iiInf"] = json_of_double(r.ii_inf);
  j["ii2"] = json_of_double(r.ii_2);
  j["iiiInf"] = json_of_double(r.iii_inf);
  j["iii2"] = json_of_double(r.iii_2);
  return j;
}

Json to_json(const MonteCarloResult& r) {
  Json j;
  j["trials"] = r.trials;
  j["consumed"] = r.consumed;
  j["hits"] = r.hits;
  j["pHat"] = json_of_double(r.phat);
  j["stdError"] = json_of_double(r.stderr_);
  j["seed"] = r.seed;
  j["workers"] = r.workers;
  j["shortCircuited"] = r.short_circuited;
  Json chunks = Json::array();
  for (const auto& c : r.chunks) {
    Json cj;
    cj["first"] = c.first;
    cj["last"] = c.last;
    cj["hits"] = c.hits;
    chunks.push_back(std::move(cj));
  }
  j["chunks"] = chunks;
  return j;
}

Json to_json(const ExactHitResult& r) {
  Json j;
  j["hits"] = json_of_int(r.hits);
  j["assignments"] = json_of_int(r.assignments);
  j["probability"] = json_of_rat(r.probability);
  return j;
}

Json to_json(const EstimateReport& r) {
  Json j;
  j["numBlocks"] = r.num_blocks;
  j["dimV"] = r.dim_v;
  j["l"] = r.l;
  j["detLPhi"] = json_of_int(r.det_l_phi);
  j["detLPhiProduct"] = json_of_int(r.det_l_phi_product);
  j["c1"] = json_of_int(r.c1);
  j["c2"] = json_of_rat(r.c2);
  j["c3"] = json_of_int(r.c3);
  j["c3Source"] = r.c3_source;
  Json kc;
  kc["thmMain"] = json_of_double(r.constants.thm_main);
  kc["thmSingle"] = json_of_double(r.constants.thm_single);
  kc["norm"] = json_of_double(r.constants.norm);
  kc["i1"] = json_of_double(r.constants.i1);
  kc["epsChoice"] = json_of_double(r.constants.eps_choice);
  kc["c2"] = json_of_double(r.constants.c2);
  if (r.constants.eps_override) kc["epsOverride"] = json_of_double(*r.constants.eps_override);
  j["constants"] = kc;
  j["mConst"] = json_of_double(r.m_const);
  j["eps"] = json_of_double(r.eps);
  j["epsClamped"] = r.eps_clamped;
  j["epsOverridden"] = r.eps_overridden;
  j["logGaussianDensityAtMean"] = json_of_double(r.log_gaussian_density_at_mean);
  j["logPointEstimate"] = json_of_double(r.log_point_estimate);
  j["pointEstimate"] = json_of_double(r.point_estimate);
  Json ib;
  ib["logI1"] = json_of_double(r.ibounds.log_i1);
  ib["logI2"] = json_of_double(r.ibounds.log_i2);
  ib["logI3"] = json_of_double(r.ibounds.log_i3);
  ib["i1Ok"] = r.ibounds.i1_ok;
  ib["i2Ok"] = r.ibounds.i2_ok;
  if (!r.ibounds.i1_reason.empty()) ib["i1Reason"] = r.ibounds.i1_reason;
  if (!r.ibounds.i2_reason.empty()) ib["i2Reason"] = r.ibounds.i2_reason;
  j["iBounds"] = ib;
  j["alpha1"] = json_of_double(r.alpha1);
  j["logAlpha2"] = json_of_double(r.log_alpha2);
  j["logAlpha3"] = json_of_double(r.log_alpha3);
  j["alphaConditionsMet"] = r.alpha_conditions_met;
  j["lowerBoundValid"] = r.lower_bound_valid;
  j["logLowerBound"] = json_of_double(r.log_lower_bound);
  j["c1DividesPartSize"] = r.c1_divides_part_size;
  j["mainThreshold"] = to_json(r.main_threshold);
  j["singleThreshold"] = to_json(r.single_threshold);
  return j;
}

Json to_json(const SearchOutcome& r) {
  Json j;
  switch (r.status) {
    case SearchOutcome::Status::Found: j["status"] = "found"; break;
    case SearchOutcome::Status::Exhausted: j["status"] = "exhausted"; break;
    case SearchOutcome::Status::BudgetExceeded: j["status"] = "budget-exceeded"; break;
  }
  j["nodes"] = r.nodes;
  j["restarts"] = r.restarts;
  j["solutionCount"] = json_of_int(r.solution_count);
  if (!r.reason.empty()) j["reason"] = r.reason;
  // elapsed_seconds deliberately omitted: identical argv must give
  // byte-identical output
  if (r.design) j["design"] = to_json(*r.design);
  if (r.large_set) j["largeSet"] = to_json(*r.large_set);
  return j;
}

Json to_json(const DisjointDesignsResult& r) {
  Json j;
  j["count"] = r.count;
  j["designsEnumerated"] = r.designs_enumerated;
  Json w = Json::array();
  for (const auto& d : r.witness) w.push_back(to_json(d));
  j["witness"] = w;
  return j;
}

Json lattice_report_json(const IncidenceSystem& sys, std::optional<int> l) {
  Json j;
  const LatticeBasis lat = lattice_of(sys);
  if (l && !lat.full_rank())
    fail(ErrorKind::NotFullRank, "membership verdict for l requires a full-rank row lattice");
  j["ambientDim"] = lat.ambient;
  j["rank"] = lat.rank();
  j["fullRank"] = lat.full_rank();
  Json basis = Json::array();
  for (std::size_t r = 0; r < lat.basis.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < lat.basis.cols(); ++c) row.push_back(json_of_int(lat.basis.at(r, c)));
    basis.push_back(std::move(row));
  }
  j["basis"] = basis;
  j["constantsInRowSpace"] = check_constants_in_V(sys);
  if (lat.full_rank()) {
    j["determinant"] = json_of_int(lattice_determinant(lat));
    j["c1"] = json_of_int(divisibility_parameter(sys));
    const RatMat dual = dual_basis(lat);
    Json dj = Json::array();
    for (std::size_t r = 0; r < dual.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < dual.cols(); ++c) row.push_back(json_of_rat(dual.at(r, c)));
      dj.push_back(std::move(row));
    }
    j["dualBasis"] = dj;
    if (l) {
      j["l"] = *l;
      j["productDeterminant"] = json_of_int(product_lattice_determinant(lat, *l));
      j["mainDivisibility"] = check_main_divisibility(sys, *l);
    }
  }
  return j;
}

std::string monte_carlo_csv(const MonteCarloResult& r) {
  std::string out = "first,last,hits\n";
  for (const auto& c : r.chunks)
    out += std::to_string(c.first) + "," + std::to_string(c.last) + "," +
           std::to_string(c.hits) + "\n";
  return out;
}

}  // namespace largeset
