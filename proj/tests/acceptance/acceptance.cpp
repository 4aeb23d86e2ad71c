// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "depolqfi/asymptotics.hpp"
#include "depolqfi/cli.hpp"
#include "depolqfi/correlated.hpp"
#include "depolqfi/oracle.hpp"
#include "depolqfi/pair_correlations.hpp"
#include "depolqfi/qubit_protocols.hpp"

using namespace depolqfi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome table_one() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const int m_expected[] = {1, 2, 5, 10, 50, 100};
  const double gain_expected[] = {1.00, 1.28, 2.15, 3.97, 18.67, 37.07};
  const auto rows = asymptotics::optimal_table(asymptotics::InvocationMode::spectator);
  o.check(rows.size() == 6, "expected 6 rows");
  for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
    o.check(rows[i].m_opt == m_expected[i], fmt("lambda=%.3f: m_opt mismatch", rows[i].lambda));
    o.check(std::abs(rows[i].optimal_gain_coefficient - gain_expected[i]) <= 0.01,
            fmt("lambda=%.3f: gain %.4f", rows[i].lambda, rows[i].optimal_gain_coefficient));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(secs < 1.0, fmt("runtime %.3fs", secs));
  o.notes.push_back(fmt("runtime %.2e s", secs));
  return o;
}

Outcome table_two() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const int printed_m[] = {1, 3, 9, 19, 33, 100};
  const double gain_expected[] = {1.00, 2.16, 15.01, 56.96, 155.03, 1367.00};
  const auto rows = asymptotics::optimal_table(asymptotics::InvocationMode::all_qubits);
  o.check(rows.size() == 6, "expected 6 rows");
  for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
    const auto& row = rows[i];
    const bool m_ok = row.m_opt == printed_m[i] || (row.tie_partner && *row.tie_partner == printed_m[i]);
    o.check(m_ok, fmt("lambda=%.3f: printed m not in {m_opt, tie_partner}", row.lambda));
    const double tol = i == 5 ? 1.0 : 0.1;
    o.check(std::abs(row.optimal_gain_coefficient - gain_expected[i]) <= tol,
            fmt("lambda=%.3f: gain %.4f", row.lambda, row.optimal_gain_coefficient));
    if (row.tie_partner) {
      o.notes.push_back(fmt("lambda=%.3f tie {%g, %g}", row.lambda, row.m_opt, *row.tie_partner));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(secs < 1.0, fmt("runtime %.3fs", secs));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  oracle::VerificationGrid grid;
  grid.max_n = 6;
  grid.r_values = {0.0, 0.1, 0.5, 0.9, 1.0};
  grid.lambda_values = {0.0, 0.3, 0.7, 0.99};
  double worst_rel = 0.0;
  double worst_state = 0.0;
  std::size_t count = 0;
  for (const auto& rep : oracle::verify_grid(grid, 1e-8, 1e-12)) {
    ++count;
    worst_rel = std::max(worst_rel, rep.rel_err);
    worst_state = std::max(worst_state, rep.max_state_entry_err);
    o.check(rep.pass, fmt("n=%g m=%g r=%g failed", rep.params.n, rep.params.m, rep.params.r));
  }
  o.check(count == 21 * 20, "unexpected grid size");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(secs < 180.0, fmt("runtime %.1fs", secs));
  o.notes.push_back(fmt("%g points, max rel_err %.2e, max state err %.2e", double(count), worst_rel, worst_state));
  o.notes.push_back(fmt("runtime %.2f s", secs));
  return o;
}

Outcome reductions() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  std::uniform_real_distribution<double> ul(0.0, 0.999);
  double worst_corr = 0.0;
  double worst_seq = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double r = ur(rng);
    const double lambda = ul(rng);
    const double base = qubit::sqsc_qfi(r, lambda);
    worst_corr = std::max(worst_corr, std::abs(correlated::correlated_qfi(ProtocolParams::make(1, 1, r, lambda)).value - base));
    worst_seq = std::max(worst_seq, std::abs(qubit::sequential_qfi(1, r, lambda).value - base));
  }
  o.check(worst_corr <= 1e-12, fmt("correlated(n=1,m=1) deviates from SQSC by %.2e", worst_corr));
  o.check(worst_seq <= 1e-12, fmt("sequential(m=1) deviates from SQSC by %.2e", worst_seq));

  double worst_target = 0.0;
  double worst_affine = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double lambda = k / 10.0;
    const double h = correlated::correlated_qfi(ProtocolParams::make(2, 1, 1.0, lambda)).value;
    worst_target = std::max(worst_target, std::abs(h - 3.0 / ((3.0 + lambda) * (1.0 - lambda))));
    worst_affine = std::max(worst_affine, std::abs(h - 3.0 / ((1.0 + 3.0 * lambda) * (1.0 - lambda))));
  }
  o.check(worst_target <= 1e-10,
          fmt("correlated(n=2,m=1,r=1) vs 3/((3+l)(1-l)): max deviation %.3e", worst_target));
  o.notes.push_back(fmt("correlated(n=2,m=1,r=1) vs 3/((1+3l)(1-l)): max deviation %.2e", worst_affine));
  o.notes.push_back(fmt("at l=0.5: closed form %.7f, oracle %.7f",
                        correlated::correlated_qfi(ProtocolParams::make(2, 1, 1.0, 0.5)).value,
                        oracle::verify(ProtocolParams::make(2, 1, 1.0, 0.5)).oracle_qfi));
  return o;
}

double lowr_deviation(int n, int m, double r, double lambda) {
  const double exact = correlated::correlated_qfi(ProtocolParams::make(n, m, r, lambda)).per_channel;
  return std::abs(exact / asymptotics::lowr_correlated_per_channel(n, m, r, lambda) - 1.0);
}

// least-squares slope of log dev against log r
double loglog_slope(int n, int m, double lambda) {
  const double rs[] = {1e-2, 1e-3, 1e-4};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double r : rs) {
    const double x = std::log(r);
    const double y = std::log(lowr_deviation(n, m, r, lambda));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
}

Outcome low_polarization() {
  Outcome o;
  double worst = 0.0;
  int degenerate = 0;
  for (int n : {2, 4, 6}) {
    std::vector<int> ms{1, 2, n};
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (int m : ms) {
      for (double lambda : {0.5, 0.8, 0.95}) {
        const double dev = lowr_deviation(n, m, 1e-3, lambda);
        worst = std::max(worst, dev);
        o.check(dev <= 1e-3, fmt("n=%g m=%g dev %.2e", n, m, dev));
        // vanishing r^2 correction: the deviation falls faster than r^2 and hits rounding
        if (lowr_deviation(n, m, 1e-2, lambda) < 1e-3 * lowr_deviation(n, m, 1e-1, lambda)) {
          ++degenerate;
          continue;
        }
        const double slope = loglog_slope(n, m, lambda);
        o.check(std::abs(slope - 2.0) <= 0.1, fmt("n=%g m=%g slope %.3f", n, m, slope));
      }
    }
  }
  const double pinned = loglog_slope(4, 2, 0.8);
  o.check(std::abs(pinned - 2.0) <= 0.1, fmt("(n=4,m=2,l=0.8) slope %.4f", pinned));
  o.notes.push_back(fmt("max deviation at r=1e-3: %.2e; slope (n=4,m=2,l=0.8) %.4f", worst, pinned));
  o.notes.push_back(fmt("%g configurations have zero r^2 correction (slope skipped)", degenerate));
  return o;
}

Outcome sequential_gain_properties() {
  Outcome o;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> um(1, 12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double tol = 1e-12;
  for (int k = 0; k < 200; ++k) {
    const int m = um(rng);
    const double r = u(rng) * 0.99;
    const double lambda = u(rng) * 0.98;
    const double dr = 0.01 * (1.0 - r);
    const double dl = 0.01 * (1.0 - lambda);
    const double g = qubit::sequential_gain(m, r, lambda);
    o.check(qubit::sequential_gain(m, r + dr, lambda) <= g + tol, fmt("not nonincreasing in r at m=%g r=%g l=%g", m, r, lambda));
    o.check(qubit::sequential_gain(m, r, lambda + dl) >= g - tol, fmt("not nondecreasing in l at m=%g r=%g l=%g", m, r, lambda));
    o.check(g <= m + tol, "bound G <= m violated");
    o.check(qubit::sequential_gain(m, 1.0, lambda) <= 1.0 + tol, "bound G <= 1 at r = 1 violated");
    o.check(std::abs(qubit::sequential_gain_at_unit_lambda(m, r) - m) <= 1e-9, "lambda -> 1 limit != m");
    o.check(std::abs(qubit::sequential_gain_at_unit_lambda(m, 1.0) - 1.0) <= 1e-9, "lambda -> 1 limit != 1 at r = 1");
  }
  return o;
}

Outcome ppt_threshold() {
  Outcome o;
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m)
    for (double lambda : {0.3, 0.6, 0.9}) {
      const double expected = std::sqrt(1.0 + 1.0 / std::pow(lambda, m)) - 1.0;
      auto min_eig = [&](double r) { return pairs::ppt_analysis(m, r, lambda).min_eigenvalue; };
      if (expected > 1.0) {
        o.check(min_eig(1.0) >= 0.0 && pairs::separability_threshold(m, lambda) == 1.0,
                fmt("m=%g l=%g: expected no sign change in [0,1]", m, lambda));
        continue;
      }
      double lo = 0.0;
      double hi = 1.0;
      o.check(min_eig(lo) >= 0.0 && min_eig(hi) < 0.0, "no bracket");
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (min_eig(mid) >= 0.0 ? lo : hi) = mid;
      }
      const double err = std::abs(0.5 * (lo + hi) - expected);
      worst = std::max(worst, err);
      o.check(err <= 1e-10, fmt("m=%g l=%g bisection error %.2e", m, lambda, err));
      o.check(std::abs(pairs::separability_threshold(m, lambda) - expected) <= 1e-15, "closed-form threshold");
    }
  for (int m = 1; m <= 4; ++m) {
    o.check(std::abs(pairs::separability_threshold(m, 1.0) - (std::sqrt(2.0) - 1.0)) <= 1e-12, "unit-lambda threshold");
  }
  o.notes.push_back(fmt("max bisection error %.2e", worst));
  return o;
}

Outcome discord_suite() {
  Outcome o;
  for (int m = 1; m <= 4; ++m)
    for (double lambda : {0.0, 0.5, 1.0}) o.check(pairs::discord(m, 0.0, lambda) == 0.0, "Q(r=0) != 0");
  double worst_init = 0.0;
  double worst_spec = 0.0;
  double min_q = 1.0;
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= 100; ++k) {
      const double r = k / 100.0;
      worst_init = std::max(worst_init, std::abs(pairs::discord(m, r, 1.0) - pairs::discord_initial(r)));
    }
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double r = i / 19.0;
        const double lambda = j / 19.0;
        min_q = std::min(min_q, pairs::discord(m, r, lambda));
        const auto mu = pairs::discord_intermediates(m, r, lambda);
        std::vector<double> want{mu.mu0 / 4, mu.mu1 / 4, mu.mu2 / 4, mu.mu3 / 4};
        std::sort(want.begin(), want.end());
        const auto got = linalg::hermitian_eig(pairs::rotated_final_matrix(m, r, lambda)).eigenvalues;
        for (int q = 0; q < 4; ++q) worst_spec = std::max(worst_spec, std::abs(got[q] - want[q]));
      }
  }
  o.check(worst_init <= 1e-12, fmt("unit-lambda discord vs initial formula %.2e", worst_init));
  o.check(worst_spec <= 1e-12, fmt("mu-list vs rotated spectrum %.2e", worst_spec));
  o.check(min_q >= -1e-12, fmt("negative discord %.2e", min_q));
  o.notes.push_back(fmt("max |Q(l=1)-Q0| %.2e, max spectrum err %.2e, min Q %.2e", worst_init, worst_spec, min_q));
  return o;
}

Outcome figure_smoke() {
  Outcome o;
  cli::SweepSpec spec;
  spec.protocol = cli::SweepProtocol::corr_vs_seq;
  spec.n_values = {4};
  spec.m_values = {2, 3, 4};
  spec.r_grid = cli::parse_grid("0.05:0.95:19");
  spec.lambda_grid = cli::parse_grid("0.05:0.95:19");
  spec.parallelism = 2;
  double min_gain = 1e300;
  const auto rows = cli::run_sweep(spec);
  for (const auto& row : rows) {
    o.check(row.gain_vs_seq.has_value(), "missing gain_vs_seq");
    if (row.gain_vs_seq) min_gain = std::min(min_gain, *row.gain_vs_seq);
  }
  o.check(rows.size() == 3 * 19 * 19, "unexpected sweep size");
  o.check(min_gain > 1.0, fmt("min gain_vs_seq %.6f", min_gain));

  const double first = asymptotics::sequential_cutoff(1).cutoff;
  o.check(std::abs(first - std::exp(-0.5)) <= 1e-12 && std::abs(first - 0.6065) < 1e-4, "m -> 1 endpoint");
  double prev = first;
  for (int m = 2; m <= 1000; ++m) {
    const double c = asymptotics::sequential_cutoff(m).cutoff;
    o.check(c > prev && c < 1.0, fmt("cutoff not increasing below 1 at m=%g", m));
    prev = c;
  }
  o.check(asymptotics::sequential_cutoff(1000000).cutoff > 0.9999, "cutoff does not approach 1");
  o.notes.push_back(fmt("min gain_vs_seq %.4f over %g points; cutoff(1)=%.6f", min_gain, double(rows.size()), first));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Table I optimal invocations", table_one},
      {2, "Table II optimal invocations", table_two},
      {3, "oracle equivalence n <= 6", oracle_equivalence},
      {4, "reduction identities", reductions},
      {5, "low-polarization limits", low_polarization},
      {6, "sequential gain properties", sequential_gain_properties},
      {7, "PPT separability threshold", ppt_threshold},
      {8, "discord suite", discord_suite},
      {9, "figure data smoke checks", figure_smoke},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.pass ? "" : " -- ", o.detail.c_str());
    for (const auto& note : o.notes) std::printf("     %s\n", note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
