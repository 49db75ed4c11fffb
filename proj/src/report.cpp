#include "xygap/report.hpp"

#include <cstdio>

namespace xygap::report {

using nlohmann::json;

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_phase_csv(std::ostream& os, std::span<const classical::PhaseRecord> records) {
  os << "gamma,h,theta0,m_x,gap\n";
  for (const auto& r : records)
    os << format_double(r.gamma) << ',' << format_double(r.h) << ',' << format_double(r.theta0) << ','
       << format_double(r.m_x) << ',' << format_double(r.gap) << '\n';
}

void write_phase_json(std::ostream& os, std::span<const classical::PhaseRecord> records) {
  // Hand-written so every float carries exactly 17 significant digits.
  os << "{\"schema_version\":" << kSchemaVersion << ",\"records\":[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << (i ? ",\n" : "\n") << "{\"gamma\":" << format_double(r.gamma) << ",\"h\":" << format_double(r.h)
       << ",\"theta0\":" << format_double(r.theta0) << ",\"m_x\":" << format_double(r.m_x)
       << ",\"gap\":" << format_double(r.gap) << '}';
  }
  os << "\n]}\n";
}

namespace {

struct FiniteGapFields {
  std::string delta, branch, gap, gap_decimal, numeric;
};

FiniteGapFields fields(const FiniteGapRow& row) {
  FiniteGapFields f;
  if (row.numeric) f.numeric = format_double(*row.numeric);
  if (row.exact) {
    f.delta = row.exact->delta.delta.str();
    f.branch = gaplaw::to_string(row.exact->branch);
    if (row.exact->branch != gaplaw::Branch::Degenerate) {
      f.gap = row.exact->gap.str();
      f.gap_decimal = format_double(row.exact->gap.to_double());
    }
  } else {
    f.branch = "numeric";
    f.gap = f.numeric;
    f.gap_decimal = f.numeric;
  }
  return f;
}

}  // namespace

void write_finite_gap_csv(std::ostream& os, std::span<const FiniteGapRow> rows) {
  os << "N,gamma,delta,branch,gap,gap_decimal,numeric_gap,h\n";
  for (const auto& row : rows) {
    const FiniteGapFields f = fields(row);
    os << row.N << ',' << row.gamma.str() << ',' << f.delta << ',' << f.branch << ',' << f.gap << ','
       << f.gap_decimal << ',' << f.numeric << ',' << format_double(row.h) << '\n';
  }
}

void write_finite_gap_json(std::ostream& os, std::span<const FiniteGapRow> rows) {
  json records = json::array();
  for (const auto& row : rows) {
    const FiniteGapFields f = fields(row);
    json r = {{"N", row.N},         {"gamma", row.gamma.str()}, {"h", row.h},
              {"branch", f.branch}, {"gap", f.gap},             {"gap_decimal", f.gap_decimal}};
    r["numeric_gap"] = row.numeric ? json(*row.numeric) : json(nullptr);
    if (row.exact) {
      r["delta"] = f.delta;
      r["excited_degenerate"] = row.exact->excited_degenerate;
    }
    records.push_back(std::move(r));
  }
  os << json{{"schema_version", kSchemaVersion}, {"records", std::move(records)}}.dump(1) << '\n';
}

namespace {

json rational_json(const exact::ExactRational& r) {
  return {{"exact", r.str()},
          {"decimal", r.decimal(17)},
          {"numerator_bits", r.numerator_bits()},
          {"denominator_bits", r.denominator_bits()}};
}

}  // namespace

json scaling_report_json(const scaling::ScalingReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"N", row.N.get_str()},
                    {"status", "certified"},
                    {"delta", rational_json(row.delta)},
                    {"delta_minus_half", rational_json(row.delta_minus_half)},
                    {"gap", rational_json(row.gap)},
                    {"gap_lower", row.gap_lower.decimal(17)},
                    {"gap_upper", row.gap_upper.decimal(17)},
                    {"tail_sum", rational_json(row.tail_sum)},
                    {"coarse_tail", row.coarse_tail}});
  }
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"n", f.n}, {"status", "failed"}, {"reason", f.reason}});

  return {{"schema_version", kSchemaVersion},
          {"sequence",
           {{"kind", exact::to_string(report.sequence.kind)},
            {"rule", scaling::to_string(report.sequence.rule)},
            {"n_max", report.sequence.n_max}}},
          {"gamma",
           {{"spec", exact::describe(report.gamma)}, {"value", rational_json(report.gamma_value)}}},
          {"rows", std::move(rows)},
          {"failed_rows", std::move(failures)},
          {"classified_rows", report.classified_rows},
          {"classification", scaling::to_string(report.classification)},
          {"certificate", report.certificate}};
}

void write_scaling_csv(std::ostream& os, const scaling::ScalingReport& report) {
  os << "n,N,delta_minus_half,gap,gap_decimal\n";
  for (const auto& row : report.rows)
    os << row.n << ',' << row.N.get_str() << ',' << row.delta_minus_half.str() << ',' << row.gap.str() << ','
       << row.gap.decimal(17) << '\n';
}

void write_spectrum_csv(std::ostream& os, const sector::Vector<double>& eigenvalues) {
  os << "index,eigenvalue\n";
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) os << i << ',' << format_double(eigenvalues(i)) << '\n';
}

}  // namespace xygap::report
