#ifndef XYGAP_REPORT_HPP
#define XYGAP_REPORT_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "json.hpp"
#include "xygap/classical.hpp"
#include "xygap/gaplaw.hpp"
#include "xygap/scaling.hpp"
#include "xygap/tridiagonal.hpp"

namespace xygap::report {

inline constexpr int kSchemaVersion = 1;

/// "%.17g"
std::string format_double(double value);

// gamma,h,theta0,m_x,gap
void write_phase_csv(std::ostream& os, std::span<const classical::PhaseRecord> records);
void write_phase_json(std::ostream& os, std::span<const classical::PhaseRecord> records);

/// One finite-size row: exact (h = 0, 0 <= gamma < 1) and/or numeric.
struct FiniteGapRow {
  std::int64_t N = 0;
  exact::ExactRational gamma;
  double h = 0.0;
  std::optional<gaplaw::GapRecord> exact;
  std::optional<double> numeric;
};

// N,gamma,delta,branch,gap,gap_decimal,numeric_gap,h
void write_finite_gap_csv(std::ostream& os, std::span<const FiniteGapRow> rows);
void write_finite_gap_json(std::ostream& os, std::span<const FiniteGapRow> rows);

nlohmann::json scaling_report_json(const scaling::ScalingReport& report);
// n,N,delta_minus_half,gap,gap_decimal
void write_scaling_csv(std::ostream& os, const scaling::ScalingReport& report);

// index,eigenvalue
void write_spectrum_csv(std::ostream& os, const sector::Vector<double>& eigenvalues);

}  // namespace xygap::report

#endif  // XYGAP_REPORT_HPP
