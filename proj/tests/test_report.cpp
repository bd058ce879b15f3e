#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "json.hpp"
#include "pnc/bounds.hpp"
#include "pnc/errors.hpp"
#include "pnc/report.hpp"

using namespace pnc;

namespace {

BoundsReport sample_report() {
  PipelineConfig cfg;
  cfg.n_max = 100;
  cfg.weight_order = 5;
  return compute_bounds(cfg, 24);
}

BoundsReport awkward_report() {
  // Hand-built values that stress the formatter: subnormal-adjacent,
  // negative, and full-precision doubles.
  BoundsReport r;
  r.n_max = 18446744073709551615ull;
  r.weight_order = 28;
  r.alpha_partial = {0.1, std::nextafter(0.1, 1.0)};
  r.tail_mass = {1e-300, 1.0 / 3.0};
  r.log_ratio_sum = {-2.5e-17, 0.0};
  r.weight_term = {4e17, std::nextafter(4e17, 5e17)};
  r.prime_weight_total = {0.4457088868675, 0.4457088868849};
  r.residual_sup = 0.0010483499717690581;
  r.alpha_lo = 0.58586662693316327;
  r.alpha_hi = 0.58597258830600718;
  r.c_lo = 1.3359464062712614;
  r.c_hi = 1.3361880290378572;
  r.predicted_gap = 0.00025871275041205533;
  return r;
}

bool same_report(const BoundsReport& a, const BoundsReport& b) {
  return a.n_max == b.n_max && a.weight_order == b.weight_order &&
         a.alpha_partial == b.alpha_partial && a.tail_mass == b.tail_mass &&
         a.log_ratio_sum == b.log_ratio_sum &&
         a.weight_term == b.weight_term &&
         a.prime_weight_total == b.prime_weight_total &&
         a.residual_sup == b.residual_sup && a.alpha_lo == b.alpha_lo &&
         a.alpha_hi == b.alpha_hi && a.c_lo == b.c_lo && a.c_hi == b.c_hi &&
         a.predicted_gap == b.predicted_gap;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_report_format("json") == ReportFormat::json);
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK(parse_report_format("text") == ReportFormat::text);
  CHECK_THROWS_AS(parse_report_format("xml"), ConfigError);
  CHECK_THROWS_AS(parse_report_format(""), ConfigError);
}

TEST_CASE("round trips preserve every field bit for bit") {
  for (const BoundsReport& r : {sample_report(), awkward_report()}) {
    for (ReportFormat f :
         {ReportFormat::json, ReportFormat::csv, ReportFormat::text}) {
      std::string text = report_serialize(r, f);
      BoundsReport back = report_parse(text, f);
      CHECK(same_report(r, back));
    }
  }
}

TEST_CASE("serialization is deterministic") {
  BoundsReport r = sample_report();
  for (ReportFormat f :
       {ReportFormat::json, ReportFormat::csv, ReportFormat::text}) {
    CHECK(report_serialize(r, f) == report_serialize(r, f));
  }
}

TEST_CASE("json layout") {
  BoundsReport r = sample_report();
  auto j = nlohmann::json::parse(report_serialize(r, ReportFormat::json));
  CHECK(j.at("N").get<std::uint64_t>() == 100);
  CHECK(j.at("J").get<int>() == 5);
  CHECK(j.at("alpha_N").is_object());
  CHECK(j.at("alpha_N").at("lo").get<double>() == r.alpha_partial.lo);
  CHECK(j.at("alpha_N").at("hi").get<double>() == r.alpha_partial.hi);
  CHECK(j.at("E_2N").get<double>() == r.residual_sup);
  CHECK(j.at("c_lo").get<double>() == r.c_lo);
  CHECK(j.at("c_hi").get<double>() == r.c_hi);
  CHECK(j.at("predicted_gap").get<double>() == r.predicted_gap);
  // Field order is pinned: N first, predicted_gap last.
  const std::string text = report_serialize(r, ReportFormat::json);
  CHECK(text.find("\"N\"") < text.find("\"J\""));
  CHECK(text.find("\"predicted_gap\"") > text.find("\"c_hi\""));
}

TEST_CASE("csv layout") {
  BoundsReport r = sample_report();
  std::string text = report_serialize(r, ReportFormat::csv);
  const std::string header =
      "N,J,alpha_N_lo,alpha_N_hi,eps_N_lo,eps_N_hi,U_N_lo,U_N_hi,"
      "A_NJ_lo,A_NJ_hi,Y_2NJ_lo,Y_2NJ_hi,E_2N,alpha_lo,alpha_hi,"
      "c_lo,c_hi,predicted_gap";
  CHECK(text.substr(0, header.size()) == header);
  CHECK(text[header.size()] == '\n');
}

TEST_CASE("text layout ends with the interval line") {
  BoundsReport r = sample_report();
  std::string text = report_serialize(r, ReportFormat::text);
  CHECK(text.find("N = 100") != std::string::npos);
  std::size_t pos = text.rfind("c in [");
  REQUIRE(pos != std::string::npos);
  CHECK(text.find('\n', pos) == text.size() - 1);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(report_parse("{", ReportFormat::json), IoError);
  CHECK_THROWS_AS(report_parse("{}", ReportFormat::json), IoError);
  CHECK_THROWS_AS(report_parse("a,b\n1,2\n", ReportFormat::csv), IoError);
  CHECK_THROWS_AS(report_parse("", ReportFormat::csv), IoError);
  CHECK_THROWS_AS(report_parse("nonsense\n", ReportFormat::text), IoError);
  CHECK_THROWS_AS(report_parse("", ReportFormat::text), IoError);
}
