#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <json.hpp>

#include "depolqfi/asymptotics.hpp"
#include "depolqfi/cli.hpp"
#include "depolqfi/correlated.hpp"
#include "depolqfi/errors.hpp"
#include "depolqfi/params.hpp"
#include "depolqfi/qubit_protocols.hpp"

namespace depolqfi::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<double> ratio(double r, double num, double den) {
  if (r == 0.0 || den == 0.0) return std::nullopt;
  if (std::isinf(num) && std::isinf(den)) return std::nullopt;
  return num / den;
}

double sqsc_value(double r, double lambda) {
  if (lambda < 1.0) return qubit::sqsc_qfi(r, lambda);
  return r == 1.0 ? kInf : r * r / (1.0 - r * r);
}

// per-channel sequential QFI
double sequential_value(int m, double r, double lambda) {
  if (lambda < 1.0) return qubit::sequential_qfi(m, r, lambda).per_channel;
  return r == 1.0 ? kInf : m * r * r / (1.0 - r * r);
}

double sequential_gain_value(int m, double r, double lambda) {
  if (lambda < 1.0) return qubit::sequential_gain(m, r, lambda);
  return qubit::sequential_gain_at_unit_lambda(m, r);
}

}  // namespace

SweepProtocol parse_protocol(std::string_view name) {
  if (name == "sqsc") return SweepProtocol::sqsc;
  if (name == "independent") return SweepProtocol::independent;
  if (name == "sequential") return SweepProtocol::sequential;
  if (name == "correlated") return SweepProtocol::correlated;
  if (name == "corr_vs_seq") return SweepProtocol::corr_vs_seq;
  throw DomainError("unknown protocol '" + std::string(name) + "'");
}

std::string_view to_string(SweepProtocol protocol) {
  switch (protocol) {
    case SweepProtocol::sqsc: return "sqsc";
    case SweepProtocol::independent: return "independent";
    case SweepProtocol::sequential: return "sequential";
    case SweepProtocol::correlated: return "correlated";
    case SweepProtocol::corr_vs_seq: return "corr_vs_seq";
  }
  return "unknown";
}

ResultRow evaluate_row(SweepProtocol protocol, int n, int m, double r, double lambda,
                       bool allow_limit) {
  require_polarization(r);
  require_invocations(m);
  if (allow_limit) {
    require_closed_lambda(lambda);
  } else {
    require_channel_lambda(lambda);
  }
  const bool limit = lambda == 1.0;

  ResultRow row;
  row.protocol = protocol;
  row.r = r;
  row.lambda = lambda;
  row.method = std::string(to_string(limit ? Method::limit : Method::closed_form));

  const double base = sqsc_value(r, lambda);
  switch (protocol) {
    case SweepProtocol::sqsc:
      row.n = 1;
      row.m = 1;
      row.qfi = base;
      row.qfi_per_channel = base;
      row.gain_vs_sqsc = ratio(r, base, base);
      row.gain_vs_seq = row.gain_vs_sqsc;
      break;
    case SweepProtocol::independent:
      row.n = m;
      row.m = m;
      row.qfi = m * base;
      row.qfi_per_channel = base;
      row.gain_vs_sqsc = ratio(r, base, base);
      row.gain_vs_seq = ratio(r, base, sequential_value(m, r, lambda));
      break;
    case SweepProtocol::sequential: {
      row.n = 1;
      row.m = m;
      const double per = sequential_value(m, r, lambda);
      row.qfi = m * per;
      row.qfi_per_channel = per;
      if (r > 0.0) row.gain_vs_sqsc = sequential_gain_value(m, r, lambda);
      row.gain_vs_seq = ratio(r, per, per);
      break;
    }
    case SweepProtocol::correlated:
    case SweepProtocol::corr_vs_seq: {
      if (n < 1) throw DomainError("qubit count n = " + std::to_string(n) + " violates n >= 1");
      const ProtocolParams params = limit ? ProtocolParams::at_unit_lambda(n, m, r)
                                          : ProtocolParams::make(n, m, r, lambda);
      const auto report = correlated::correlated_qfi(params);
      row.n = n;
      row.m = m;
      row.qfi = report.value;
      row.qfi_per_channel = report.per_channel;
      row.gain_vs_sqsc = ratio(r, report.per_channel, base);
      row.gain_vs_seq = ratio(r, report.per_channel, sequential_value(m, r, lambda));
      break;
    }
  }
  row.crb_variance_bound = std::isinf(row.qfi) ? 0.0 : asymptotics::cramer_rao_bound(row.qfi);
  return row;
}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", value);
  return buf;
}

std::string_view csv_header() {
  return "protocol,n,m,r,lambda,qfi,qfi_per_channel,gain_vs_sqsc,gain_vs_seq,crb_variance_bound,method";
}

std::string csv_line(const ResultRow& row) {
  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  std::string line;
  line += to_string(row.protocol);
  line += ',' + std::to_string(row.n) + ',' + std::to_string(row.m);
  line += ',' + format_real(row.r) + ',' + format_real(row.lambda);
  line += ',' + format_real(row.qfi) + ',' + format_real(row.qfi_per_channel);
  line += ',' + opt(row.gain_vs_sqsc) + ',' + opt(row.gain_vs_seq);
  line += ',' + format_real(row.crb_variance_bound) + ',' + row.method;
  return line;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::string text(csv_header());
  text += '\n';
  for (const auto& row : rows) text += csv_line(row) + '\n';
  return text;
}

std::string rows_to_json(const std::vector<ResultRow>& rows) {
  auto real = [](double v) -> nlohmann::ordered_json {
    if (std::isinf(v)) return "inf";
    return v;
  };
  auto opt = [&](const std::optional<double>& v) -> nlohmann::ordered_json {
    if (!v) return nullptr;
    return real(*v);
  };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    arr.push_back({{"protocol", std::string(to_string(row.protocol))},
                   {"n", row.n},
                   {"m", row.m},
                   {"r", row.r},
                   {"lambda", row.lambda},
                   {"qfi", real(row.qfi)},
                   {"qfi_per_channel", real(row.qfi_per_channel)},
                   {"gain_vs_sqsc", opt(row.gain_vs_sqsc)},
                   {"gain_vs_seq", opt(row.gain_vs_seq)},
                   {"crb_variance_bound", real(row.crb_variance_bound)},
                   {"method", row.method}});
  }
  return arr.dump(2) + '\n';
}

}  // namespace depolqfi::cli
