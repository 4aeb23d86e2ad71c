#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <tuple>

#include "depolqfi/asymptotics.hpp"
#include "depolqfi/cli.hpp"
#include "depolqfi/errors.hpp"

namespace depolqfi::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DomainError("cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

int to_int(std::string_view s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DomainError("cannot parse integer '" + std::string(s) + "'");
  }
  return v;
}

struct Point {
  int n;
  int m;
  double r;
  double lambda;
};

std::vector<Point> sweep_points(const SweepSpec& spec) {
  std::vector<Point> points;
  auto add = [&](int n, int m) {
    for (const double r : spec.r_grid)
      for (const double lambda : spec.lambda_grid) points.push_back({n, m, r, lambda});
  };
  switch (spec.protocol) {
    case SweepProtocol::sqsc:
      add(1, 1);
      break;
    case SweepProtocol::independent:
      for (const int m : spec.m_values) add(m, m);
      break;
    case SweepProtocol::sequential:
      for (const int m : spec.m_values) add(1, m);
      break;
    case SweepProtocol::correlated:
    case SweepProtocol::corr_vs_seq:
      for (const int n : spec.n_values)
        for (const int m : spec.m_values)
          if (m <= n) add(n, m);
      break;
  }
  return points;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {to_double(parts[0])};
  if (parts.size() != 3) throw DomainError("grid '" + std::string(text) + "' is not start:stop:count");
  const double start = to_double(parts[0]);
  const double stop = to_double(parts[1]);
  const int count = to_int(parts[2]);
  if (count < 1) throw DomainError("grid count must be >= 1");
  if (count == 1) {
    if (start != stop) throw DomainError("grid with count 1 needs start == stop");
    return {start};
  }
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) {
    values[i] = i == count - 1 ? stop : start + (stop - start) * i / (count - 1);
  }
  return values;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  for (const auto item : split(text, ',')) {
    const auto range = split(item, ':');
    if (range.size() == 1) {
      values.push_back(to_int(range[0]));
    } else if (range.size() == 2) {
      const int lo = to_int(range[0]);
      const int hi = to_int(range[1]);
      if (hi < lo) throw DomainError("range '" + std::string(item) + "' is empty");
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      throw DomainError("cannot parse integer list '" + std::string(text) + "'");
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  if (spec.r_grid.empty() || spec.lambda_grid.empty()) throw DomainError("sweep grids must be nonempty");
  for (const double lambda : spec.lambda_grid) {
    if (lambda == 1.0 && !spec.include_limit) {
      throw DomainError("lambda = 1 requires --include-limit");
    }
  }
  const auto points = sweep_points(spec);
  std::vector<ResultRow> rows(points.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= points.size()) return;
      try {
        const auto& p = points[i];
        rows[i] = evaluate_row(spec.protocol, p.n, p.m, p.r, p.lambda, spec.include_limit);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(spec.parallelism, static_cast<unsigned>(points.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.n, a.m, a.r, a.lambda) < std::tie(b.n, b.m, b.r, b.lambda);
  });
  return rows;
}

std::vector<std::string> figure_presets() {
  return {"seq-gain-m3", "corr-gain-n2-m1", "corr-gain-n5-m1", "corr-gain-n4-multi", "corr-vs-seq-n4",
          "cutoff"};
}

std::string figure_csv(std::string_view preset, unsigned parallelism) {
  if (preset == "cutoff") {
    std::string text = "m,cutoff,squared_cutoff\n";
    for (int m = 1; m <= 100; ++m) {
      const auto c = asymptotics::sequential_cutoff(m);
      text += std::to_string(m) + ',' + format_real(c.cutoff) + ',' + format_real(c.squared_cutoff) + '\n';
    }
    return text;
  }
  SweepSpec spec;
  spec.parallelism = parallelism;
  spec.r_grid = parse_grid("0:1:21");
  spec.lambda_grid = parse_grid("0.05:0.95:19");
  if (preset == "seq-gain-m3") {
    spec.protocol = SweepProtocol::sequential;
    spec.m_values = {3};
  } else if (preset == "corr-gain-n2-m1") {
    spec.n_values = {2};
  } else if (preset == "corr-gain-n5-m1") {
    spec.n_values = {5};
  } else if (preset == "corr-gain-n4-multi") {
    spec.n_values = {4};
    spec.m_values = {2, 3, 4};
  } else if (preset == "corr-vs-seq-n4") {
    spec.protocol = SweepProtocol::corr_vs_seq;
    spec.n_values = {4};
    spec.m_values = {2, 3, 4};
    spec.r_grid = parse_grid("0.05:0.95:19");
  } else {
    throw DomainError("unknown figure preset '" + std::string(preset) + "'");
  }
  return rows_to_csv(run_sweep(spec));
}

}  // namespace depolqfi::cli
