#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "depolqfi/asymptotics.hpp"
#include "depolqfi/cli.hpp"
#include "depolqfi/errors.hpp"
#include "depolqfi/oracle.hpp"
#include "depolqfi/pair_correlations.hpp"

namespace depolqfi::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kDomain = 2, kIo = 3, kCapacity = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ordered_json real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

OutputFormat parse_format(const std::string& name) {
  return name == "json" ? OutputFormat::json : OutputFormat::csv;
}

unsigned default_parallelism() { return std::max(1u, std::thread::hardware_concurrency()); }

ordered_json report_json(const oracle::VerificationReport& rep) {
  return {{"n", rep.params.n},
          {"m", rep.params.m},
          {"r", rep.params.r},
          {"lambda", rep.params.lambda},
          {"closed_form_qfi", real(rep.closed_form_qfi)},
          {"oracle_qfi", real(rep.oracle_qfi)},
          {"abs_err", real(rep.abs_err)},
          {"rel_err", real(rep.rel_err)},
          {"max_state_entry_err", real(rep.max_state_entry_err)},
          {"symmetry_err", real(rep.symmetry_err)},
          {"pass", rep.pass}};
}

std::string table_text(const std::string& which, OutputFormat format) {
  const auto mode =
      which == "I" ? asymptotics::InvocationMode::spectator : asymptotics::InvocationMode::all_qubits;
  const auto rows = asymptotics::optimal_table(mode);
  const std::string scaling = which == "I" ? "per_n" : "absolute";
  if (format == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      arr.push_back({{"table", which},
                     {"lambda", row.lambda},
                     {"m_opt", row.m_opt},
                     {"tie_partner", row.tie_partner ? ordered_json(*row.tie_partner) : ordered_json()},
                     {"gain", row.optimal_gain_coefficient},
                     {"gain_scaling", scaling}});
    }
    return arr.dump(2) + '\n';
  }
  std::string text = "table,lambda,m_opt,tie_partner,gain,gain_scaling\n";
  for (const auto& row : rows) {
    text += which + ',' + format_real(row.lambda) + ',' + std::to_string(row.m_opt) + ',';
    if (row.tie_partner) text += std::to_string(*row.tie_partner);
    text += ',' + format_real(row.optimal_gain_coefficient) + ',' + scaling + '\n';
  }
  return text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Fisher information for estimating a depolarizing channel"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one protocol point");
  std::string eval_protocol;
  int eval_n = 1;
  int eval_m = 1;
  double eval_r = 0.0;
  double eval_lambda = 0.0;
  std::string eval_format = "csv";
  bool eval_limit = false;
  eval->add_option("--protocol", eval_protocol, "sqsc|independent|sequential|correlated|corr_vs_seq")
      ->required();
  eval->add_option("--n", eval_n, "Qubits (correlated)");
  eval->add_option("--m", eval_m, "Channel invocations");
  eval->add_option("--r", eval_r, "Polarization")->required();
  eval->add_option("--lambda", eval_lambda, "Channel parameter")->required();
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"csv", "json"}));
  eval->add_flag("--include-limit", eval_limit, "Allow lambda = 1");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid");
  std::string sweep_protocol;
  std::string sweep_n = "1";
  std::string sweep_m = "1";
  std::string sweep_r;
  std::string sweep_lambda;
  std::string sweep_output = "-";
  std::string sweep_format = "csv";
  unsigned sweep_parallel = default_parallelism();
  bool sweep_limit = false;
  sweep->add_option("--protocol", sweep_protocol)->required();
  sweep->add_option("--n", sweep_n, "List such as 2,5 or 2:6");
  sweep->add_option("--m", sweep_m, "List such as 1,2 or 1:4");
  sweep->add_option("--r", sweep_r, "start:stop:count")->required();
  sweep->add_option("--lambda", sweep_lambda, "start:stop:count")->required();
  sweep->add_option("--output,-o", sweep_output, "Output path, - for stdout");
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--parallel", sweep_parallel)->check(CLI::PositiveNumber);
  sweep->add_flag("--include-limit", sweep_limit, "Allow lambda = 1");

  // table
  auto* table = app.add_subcommand("table", "Optimal invocation tables");
  std::string table_which = "I";
  std::string table_format = "csv";
  std::string table_output = "-";
  table->add_option("which", table_which, "I (spectators) or II (all qubits)")
      ->check(CLI::IsMember({"I", "II"}));
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--output,-o", table_output);

  // verify
  auto* verify = app.add_subcommand("verify", "Compare closed forms with the density-matrix oracle");
  int verify_n = 0;
  int verify_m = 0;
  double verify_r = 0.0;
  double verify_lambda = 0.0;
  bool verify_grid = false;
  int verify_max_n = 6;
  double verify_tol = 1e-8;
  double verify_state_tol = 1e-12;
  std::string verify_output = "-";
  auto* vn = verify->add_option("--n", verify_n);
  auto* vm = verify->add_option("--m", verify_m);
  auto* vr = verify->add_option("--r", verify_r);
  auto* vl = verify->add_option("--lambda", verify_lambda);
  auto* vg = verify->add_flag("--grid", verify_grid, "Run the default verification grid");
  verify->add_option("--max-n", verify_max_n)->check(CLI::PositiveNumber);
  verify->add_option("--tol", verify_tol);
  verify->add_option("--state-tol", verify_state_tol);
  verify->add_option("--output,-o", verify_output);
  for (auto* opt : {vn, vm, vr, vl}) opt->excludes(vg);

  // correlations
  auto* corr = app.add_subcommand("correlations", "Two-qubit PPT and discord");
  int corr_m = 1;
  double corr_r = 0.0;
  double corr_lambda = 0.0;
  corr->add_option("--m", corr_m)->required();
  corr->add_option("--r", corr_r)->required();
  corr->add_option("--lambda", corr_lambda)->required();

  // figure
  auto* figure = app.add_subcommand("figure", "Named figure data presets");
  std::string figure_name;
  std::string figure_output = "-";
  unsigned figure_parallel = default_parallelism();
  figure->add_option("preset", figure_name)->required()->check(CLI::IsMember(figure_presets()));
  figure->add_option("--output,-o", figure_output);
  figure->add_option("--parallel", figure_parallel)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomain;
  }

  try {
    if (eval->parsed()) {
      const auto row = evaluate_row(parse_protocol(eval_protocol), eval_n, eval_m, eval_r,
                                    eval_lambda, eval_limit);
      out << (parse_format(eval_format) == OutputFormat::json ? rows_to_json({row})
                                                               : rows_to_csv({row}));
      return kOk;
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.protocol = parse_protocol(sweep_protocol);
      spec.n_values = parse_int_list(sweep_n);
      spec.m_values = parse_int_list(sweep_m);
      spec.r_grid = parse_grid(sweep_r);
      spec.lambda_grid = parse_grid(sweep_lambda);
      spec.include_limit = sweep_limit;
      spec.output_path = sweep_output;
      spec.format = parse_format(sweep_format);
      spec.parallelism = sweep_parallel;
      const auto rows = run_sweep(spec);
      write_output(spec.output_path,
                   spec.format == OutputFormat::json ? rows_to_json(rows) : rows_to_csv(rows), out);
      return kOk;
    }
    if (table->parsed()) {
      write_output(table_output, table_text(table_which, parse_format(table_format)), out);
      return kOk;
    }
    if (verify->parsed()) {
      std::vector<oracle::VerificationReport> reports;
      if (verify_grid) {
        oracle::VerificationGrid grid;
        grid.max_n = verify_max_n;
        reports = oracle::verify_grid(grid, verify_tol, verify_state_tol);
      } else {
        if (vn->count() == 0 || vm->count() == 0 || vr->count() == 0 || vl->count() == 0) {
          err << "verify: give --n --m --r --lambda or --grid\n";
          return kDomain;
        }
        reports.push_back(oracle::verify(ProtocolParams::make(verify_n, verify_m, verify_r, verify_lambda),
                                         verify_tol, verify_state_tol));
      }
      ordered_json arr = ordered_json::array();
      bool all_pass = true;
      for (const auto& rep : reports) {
        arr.push_back(report_json(rep));
        all_pass = all_pass && rep.pass;
      }
      write_output(verify_output, arr.dump(2) + '\n', out);
      return all_pass ? kOk : kVerifyFailed;
    }
    if (corr->parsed()) {
      const auto rep = pairs::correlation_report(corr_m, corr_r, corr_lambda);
      const ordered_json obj = {{"m", rep.m},
                                {"r", rep.r},
                                {"lambda", rep.lambda},
                                {"ppt_min_eigenvalue", rep.ppt_min_eigenvalue},
                                {"separable", rep.separable},
                                {"separability_threshold_r", rep.separability_threshold_r},
                                {"at_threshold", std::abs(rep.r - rep.separability_threshold_r) <= 1e-12},
                                {"discord", rep.discord},
                                {"discord_initial", rep.discord_initial}};
      out << obj.dump(2) << '\n';
      return kOk;
    }
    if (figure->parsed()) {
      write_output(figure_output, figure_csv(figure_name, figure_parallel), out);
      return kOk;
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const IoError& e) {
    err << "io: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "domain: " << e.what() << '\n';
    return kDomain;
  } catch (const UndefinedGainError& e) {
    err << "domain: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kDomain;
}

}  // namespace depolqfi::cli
