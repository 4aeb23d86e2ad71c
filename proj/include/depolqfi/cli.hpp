#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace depolqfi::cli {

enum class SweepProtocol { sqsc, independent, sequential, correlated, corr_vs_seq };

SweepProtocol parse_protocol(std::string_view name);
std::string_view to_string(SweepProtocol protocol);

struct ResultRow {
  SweepProtocol protocol = SweepProtocol::sqsc;
  int n = 1;
  int m = 1;
  double r = 0.0;
  double lambda = 0.0;
  double qfi = 0.0;
  double qfi_per_channel = 0.0;
  std::optional<double> gain_vs_sqsc;
  std::optional<double> gain_vs_seq;
  double crb_variance_bound = 0.0;
  std::string method;
};

// lambda = 1 is accepted only when allow_limit is set.
ResultRow evaluate_row(SweepProtocol protocol, int n, int m, double r, double lambda,
                       bool allow_limit = false);

// %.9e, or "inf"
std::string format_real(double value);

std::string_view csv_header();
std::string csv_line(const ResultRow& row);
std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::string rows_to_json(const std::vector<ResultRow>& rows);

// "start:stop:count" or a single value.
std::vector<double> parse_grid(std::string_view text);
// "2,5", "2:4" or a mix like "1,3:5".
std::vector<int> parse_int_list(std::string_view text);

enum class OutputFormat { csv, json };

struct SweepSpec {
  SweepProtocol protocol = SweepProtocol::correlated;
  std::vector<int> n_values{1};
  std::vector<int> m_values{1};
  std::vector<double> r_grid;
  std::vector<double> lambda_grid;
  bool include_limit = false;
  std::string output_path = "-";
  OutputFormat format = OutputFormat::csv;
  unsigned parallelism = 1;
};

// Rows in (n, m, r, lambda) order for every admissible combination.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

// Sweep specs or cutoff table for the named figure preset.
std::vector<std::string> figure_presets();
std::string figure_csv(std::string_view preset, unsigned parallelism);

// 0 ok, 1 verification failure, 2 domain or usage error, 3 I/O, 4 capacity.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace depolqfi::cli
