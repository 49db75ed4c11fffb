#include <sstream>

#include "doctest.h"
#include "xygap/report.hpp"

using namespace xygap;

TEST_CASE("float formatting is round-trippable") {
  CHECK(report::format_double(0.1) == "0.10000000000000001");
  CHECK(report::format_double(2.0) == "2");
}

TEST_CASE("phase CSV header and rows") {
  const std::vector<classical::PhaseRecord> recs = {classical::phase_record({0.0, 0.5})};
  std::ostringstream os;
  report::write_phase_csv(os, recs);
  CHECK(os.str().rfind("gamma,h,theta0,m_x,gap\n", 0) == 0);
  std::ostringstream js;
  report::write_phase_json(js, recs);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["schema_version"] == 1);
  CHECK(j["records"][0]["gap"].get<double>() == doctest::Approx(std::sqrt(0.75)));
}

TEST_CASE("finite-gap rows mark degenerate and numeric entries") {
  std::vector<report::FiniteGapRow> rows;
  rows.push_back({10, exact::ExactRational(1, 2), 0.0, gaplaw::gap_record(10, exact::ExactRational(1, 2)), 0.0});
  rows.push_back({4, exact::ExactRational(0), 0.5, std::nullopt, 0.75});
  std::ostringstream os;
  report::write_finite_gap_csv(os, rows);
  CHECK(os.str() ==
        "N,gamma,delta,branch,gap,gap_decimal,numeric_gap,h\n"
        "10,1/2,1/2,degenerate,,,0,0\n"
        "4,0/1,,numeric,0.75,0.75,0.75,0.5\n");
  std::ostringstream js;
  report::write_finite_gap_json(js, rows);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["records"][0]["branch"] == "degenerate");
  CHECK(j["records"][1]["numeric_gap"].get<double>() == 0.75);
}

TEST_CASE("scaling report JSON carries exact rationals") {
  const auto rep = scaling::scaling_report(exact::SequenceKind::Factorial, scaling::SizeRule::Term, 4);
  const auto j = report::scaling_report_json(rep);
  CHECK(j["schema_version"] == 1);
  CHECK(j["classification"] == "Factorial");
  CHECK(j["rows"][1]["N"] == "6");
  CHECK(j["rows"][1]["gap"]["decimal"].get<std::string>().rfind("1.38888888888888", 0) == 0);
  std::ostringstream os;
  report::write_scaling_csv(os, rep);
  CHECK(os.str().rfind("n,N,delta_minus_half,gap,gap_decimal\n1,3,", 0) == 0);
}

TEST_CASE("spectrum dump") {
  sector::Vector<double> ev(2);
  ev << -1.0, 0.5;
  std::ostringstream os;
  report::write_spectrum_csv(os, ev);
  CHECK(os.str() == "index,eigenvalue\n0,-1\n1,0.5\n");
}
