// xygap: phase-diagram scans, finite-size gaps, scaling certificates and
// cross-oracle verification for the infinite-range XY model.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "xygap/classical.hpp"
#include "xygap/gamma.hpp"
#include "xygap/gaplaw.hpp"
#include "xygap/report.hpp"
#include "xygap/scaling.hpp"
#include "xygap/sector.hpp"
#include "xygap/verify.hpp"

namespace {

using namespace xygap;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("not a number: '" + s + "'");
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

/// lo:hi:count, endpoints included; a bare number is a one-point grid.
std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {to_double(parts[0])};
  if (parts.size() != 3) throw UsageError("grid must be lo:hi:count, got '" + text + "'");
  const double lo = to_double(parts[0]), hi = to_double(parts[1]);
  const std::int64_t count = to_int(parts[2]);
  if (count < 1) throw UsageError("grid count must be >= 1");
  if (count == 1) return {lo};
  if (!(lo < hi)) throw UsageError("grid range is empty: '" + text + "'");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  grid.back() = hi;
  return grid;
}

/// Comma list of sizes and/or start:stop:even|odd|all ranges.
std::vector<std::int64_t> parse_sizes(const std::string& text) {
  std::vector<std::int64_t> sizes;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      sizes.push_back(to_int(parts[0]));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const std::int64_t start = to_int(parts[0]), stop = to_int(parts[1]);
      const std::string which = parts.size() == 3 ? parts[2] : "all";
      if (which != "even" && which != "odd" && which != "all") throw UsageError("size filter must be even|odd|all");
      if (start > stop) throw UsageError("size range is empty: '" + item + "'");
      for (std::int64_t N = start; N <= stop; ++N) {
        if (which == "even" && N % 2 != 0) continue;
        if (which == "odd" && N % 2 == 0) continue;
        sizes.push_back(N);
      }
    } else {
      throw UsageError("bad size item '" + item + "'");
    }
  }
  for (auto N : sizes)
    if (N < 1) throw UsageError("system sizes must be >= 1");
  if (sizes.empty()) throw UsageError("no system sizes selected");
  return sizes;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
};

struct Common {
  std::string output;
  std::string format = "csv";
  std::size_t budget_bits = 0;

  exact::BitBudget budget() const {
    exact::BitBudget b = exact::budget_from_environment();
    if (budget_bits) b.bits = budget_bits;
    if (b.bits > exact::BitBudget::kHardCapBits) throw UsageError("bit budget exceeds the hard cap");
    return b;
  }
};

int cmd_phase_diagram(const Common& common, const std::string& gamma_grid, const std::string& h_grid, unsigned jobs) {
  const auto gammas = parse_grid(gamma_grid);
  const auto hs = parse_grid(h_grid);
  for (double g : gammas)
    if (g < 0) throw UsageError("gamma must be >= 0");
  const auto records = classical::phase_diagram_scan(gammas, hs, jobs);
  Output out(common.output);
  if (common.format == "json")
    report::write_phase_json(out.stream(), records);
  else
    report::write_phase_csv(out.stream(), records);
  out.finish();
  return kOk;
}

int cmd_finite_gap(const Common& common, const std::string& gamma_text, double h, const std::string& size_text) {
  const auto budget = common.budget();
  const auto sizes = parse_sizes(size_text);
  const exact::ExactRational gamma = exact::gamma_value(exact::parse_gamma_spec(gamma_text), budget);
  if (gamma.sign() < 0) throw UsageError("gamma must be >= 0");
  const bool exact_law = h == 0.0 && gamma < exact::ExactRational(1);
  const double gamma_d = gamma.to_double();

  std::vector<report::FiniteGapRow> rows;
  rows.reserve(sizes.size());
  for (auto N : sizes) {
    report::FiniteGapRow row{N, gamma, h, std::nullopt, std::nullopt};
    if (exact_law) row.exact = gaplaw::gap_record(N, gamma);
    row.numeric = sector::finite_gap_numeric(N, classical::FieldPoint{gamma_d, h});
    rows.push_back(std::move(row));
  }
  Output out(common.output);
  if (common.format == "json")
    report::write_finite_gap_json(out.stream(), rows);
  else
    report::write_finite_gap_csv(out.stream(), rows);
  out.finish();
  return kOk;
}

int cmd_scaling(const Common& common, const std::string& seq, const std::string& rule, int K) {
  const auto budget = common.budget();
  const auto kind = exact::parse_sequence_kind(seq);
  const auto size_rule = scaling::parse_size_rule(rule);
  if (K < 2) throw UsageError("--K must be >= 2");
  const auto rep = scaling::scaling_report(kind, size_rule, K, budget);
  Output out(common.output);
  if (common.format == "csv")
    report::write_scaling_csv(out.stream(), rep);
  else
    out.stream() << report::scaling_report_json(rep).dump(1) << '\n';
  out.finish();
  return kOk;
}

int cmd_verify(const Common& common, int max_N, bool flip) {
  verify::VerifyConfig config;
  config.max_N = max_N;
  config.flip_offdiag_sign = flip;
  config.budget = common.budget();
  if (max_N < 1) throw UsageError("--max-N must be >= 1");
  const auto results = verify::run_all(config);
  Output out(common.output);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out.stream() << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]\n";
  }
  out.stream() << (all ? "all suites passed\n" : "verification FAILED\n");
  out.finish();
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-state gaps of the infinite-range XY model"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // -h would clash with --h

  Common common;
  app.add_option("--budget", common.budget_bits, "bit budget for sequence terms (default: $XYGAP_BIT_BUDGET or 1e6)");

  std::string gamma_grid = "0:2:81", h_grid = "-1:1:81";
  unsigned jobs = 1;
  auto* pd = app.add_subcommand("phase-diagram", "thermodynamic-limit scan over (gamma, h)");
  pd->add_option("--gamma", gamma_grid, "lo:hi:count");
  pd->add_option("--h", h_grid, "lo:hi:count");
  pd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));

  std::string gamma_text = "1/3", sizes = "2:64:even";
  double h = 0.0;
  auto* fg = app.add_subcommand("finite-gap", "finite-size gaps, exact at h = 0");
  fg->add_option("--gamma", gamma_text, "rational p/q, decimal, or recipe (series:double-exp:5, digits:1,2, interval:a:b)");
  fg->add_option("--h", h);
  fg->add_option("--N", sizes, "list like 16,64 or start:stop:even|odd|all");

  std::string seq = "double-exp", rule = "a_n";
  int K = 5;
  auto* sc = app.add_subcommand("scaling", "exact gap certificates along a size sequence");
  sc->add_option("--seq", seq)->check(CLI::IsMember({"double-exp", "factorial"}));
  sc->add_option("--rule", rule)->check(CLI::IsMember({"a_n", "2a_n"}));
  sc->add_option("--K", K, "series truncation");

  int max_N = 64;
  bool flip = false;
  auto* vf = app.add_subcommand("verify", "run the cross-oracle suites");
  vf->add_option("--max-N", max_N, "largest N for the numeric oracle");
  vf->add_flag("--flip-offdiag-sign", flip, "flip off-diagonal signs before the numeric solve");

  for (auto* sub : {pd, fg, sc, vf}) sub->add_option("-o,--output", common.output, "output file (default stdout)");
  for (auto* sub : {pd, fg, sc})
    sub->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));
  sc->get_option("--format")->default_str("json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (sc->parsed() && sc->get_option("--format")->count() == 0) common.format = "json";

  try {
    if (pd->parsed()) return cmd_phase_diagram(common, gamma_grid, h_grid, jobs);
    if (fg->parsed()) return cmd_finite_gap(common, gamma_text, h, sizes);
    if (sc->parsed()) return cmd_scaling(common, seq, rule, K);
    if (vf->parsed()) return cmd_verify(common, max_N, flip);
  } catch (const exact::BudgetExceeded& e) {
    std::cerr << "xygap: budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "xygap: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "xygap: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "xygap: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
