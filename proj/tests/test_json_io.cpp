#include "doctest.h"
#include "largeset/errors.hpp"
#include "largeset/json_io.hpp"
#include "largeset/oracles.hpp"

#include <string>

using namespace largeset;

namespace {
std::string parse_error_of(const std::string& text) {
  try {
    design_from_json(parse_json_text(text, "test"));
    return "";
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    return e.what();
  }
}
}  // namespace

TEST_CASE("scalar conventions") {
  CHECK(json_of_int(Int(5)).dump() == "5");
  CHECK(json_of_int(Int(-7)).dump() == "-7");
  CHECK(json_of_int(int_pow(2, 80)).dump() == "\"1208925819614629174706176\"");
  CHECK(json_of_rat(Rat(3, 2)).dump() == "\"3/2\"");
  CHECK(json_of_rat(Rat(-6, 4)).dump() == "\"-3/2\"");
  CHECK(json_of_rat(Rat(7)).dump() == "\"7\"");
  CHECK(json_of_double(0.5).dump() == "0.5");
  CHECK(json_of_double(1.0 / 0.0).is_null());  // non-finite -> null
  // round-trips through 15 significant digits
  const Json third = json_of_double(1.0 / 3.0);
  CHECK(third.get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("design file round trip") {
  const std::string text = R"({"n":7,"k":3,"t":2,"lambda":1,
    "blocks":[[1,2,4],[2,3,5],[3,4,6],[4,5,7],[1,5,6],[2,6,7],[1,3,7]]})";
  const Design d = design_from_json(parse_json_text(text, "inline"));
  CHECK(d.n == 7);
  CHECK(d.lambda == 1);
  CHECK(d.blocks.size() == 7);
  const Json emitted = to_json(d);
  const Design again = design_from_json(emitted);
  CHECK(again.blocks == d.blocks);
  CHECK(emitted["lambda"] == 1);

  // big lambda falls back to a decimal string and parses back
  Design big = d;
  big.lambda = int_pow(10, 30);
  CHECK(design_from_json(to_json(big)).lambda == big.lambda);
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_of(R"({"k":3,"t":2,"lambda":1,"blocks":[]})").find("\"n\"") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"n":7,"k":3,"t":2,"lambda":1,"blocks":[[1,2,9]]})")
            .find("$.blocks[0][2]") != std::string::npos);
  CHECK(parse_error_of(R"({"n":7,"k":3,"t":2,"lambda":1,"blocks":[[1,2,4],[3,2,5]]})")
            .find("$.blocks[1][1]") != std::string::npos);
  CHECK(parse_error_of(R"({"n":7,"k":3,"t":2,"lambda":1,"blocks":[[1,1,4]]})")
            .find("strictly increasing") != std::string::npos);
  CHECK(parse_error_of(R"({"n":7,"k":3,"t":2,"lambda":1,"blocks":[[1,2,4.5]]})")
            .find("$.blocks[0][2]") != std::string::npos);
  CHECK(parse_error_of("{") != "");  // malformed JSON reports the source name
}

TEST_CASE("large-set file round trip and positions") {
  const std::string text =
      R"({"n":4,"k":2,"t":1,"l":3,"parts":[[[1,2],[3,4]],[[1,3],[2,4]],[[1,4],[2,3]]]})";
  const LargeSetPartition ls = large_set_from_json(parse_json_text(text, "inline"));
  CHECK(ls.l == 3);
  CHECK(ls.parts.size() == 3);
  const LargeSetPartition again = large_set_from_json(to_json(ls));
  CHECK(again.parts == ls.parts);

  try {
    large_set_from_json(parse_json_text(
        R"({"n":4,"k":2,"t":1,"l":3,"parts":[[[1,2],[3,9]]]})", "inline"));
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("$.parts[0][1][1]") != std::string::npos);
  }
}

TEST_CASE("matrix parsing enforces rectangular integer arrays") {
  const auto m = matrix_from_json(parse_json_text("[[1,2],[3,4],[5,6]]", "inline"));
  REQUIRE(m.size() == 3);
  CHECK(m[2][1] == 6);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("[[1,2],[3]]", "inline")), Error);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("[]", "inline")), Error);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("[[1,\"x\"]]", "inline")), Error);
  try {
    matrix_from_json(parse_json_text("[[1,2],[3]]", "inline"));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("$[1]") != std::string::npos);
  }
}

TEST_CASE("report serialization stays stable") {
  const IncidenceSystem sys = IncidenceSystem::design(4, 2, 1);
  const ExactHitResult r = exact_hit_probability(sys, 3);
  const Json j = to_json(r);
  CHECK(j["hits"] == 6);
  CHECK(j["assignments"] == 729);
  CHECK(j["probability"] == "2/243");

  const Json lat = lattice_report_json(sys, 3);
  CHECK(lat["fullRank"] == true);
  CHECK(lat["determinant"] == 2);
  CHECK(lat["c1"] == 2);
  CHECK(lat["mainDivisibility"] == true);
  CHECK(lat["basis"].size() == 4);
  CHECK(lat["dualBasis"][3][3] == "1/2");
  CHECK(lat["constantsInRowSpace"] == true);
}

TEST_CASE("monte carlo CSV has the pinned header") {
  MonteCarloResult r;
  r.chunks.push_back({0, 499, 3});
  r.chunks.push_back({500, 999, 5});
  CHECK(monte_carlo_csv(r) == "first,last,hits\n0,499,3\n500,999,5\n");
}
