#pragma once

#include <cmath>
#include <string_view>

namespace depolqfi {

enum class Protocol { sqsc, independent, sequential, correlated };

std::string_view to_string(Protocol protocol);

// How a QFI value was obtained. `limit` marks a closed form evaluated at the
// boundary lambda = 1, which is not a physical channel evaluation.
enum class Method { closed_form, oracle, limit };

std::string_view to_string(Method method);

// Validation helpers shared by the closed forms. Each throws DomainError
// naming the bound that failed.
void require_polarization(double r);
void require_channel_lambda(double lambda);       // 0 <= lambda < 1
void require_closed_lambda(double lambda);        // 0 <= lambda <= 1
void require_invocations(int m);

// (n, m, r, lambda) for one protocol evaluation. Channel parameters satisfy
// 0 <= lambda < 1; the boundary lambda = 1 is only reachable through
// at_unit_lambda(), which sets `limit`.
struct ProtocolParams {
  int n = 1;
  int m = 1;
  double r = 0.0;
  double lambda = 0.0;
  bool limit = false;

  static ProtocolParams make(int n, int m, double r, double lambda);
  static ProtocolParams at_unit_lambda(int n, int m, double r);

  // p + q == 1 exactly for every lambda representable in [0, 1].
  double p() const { return 0.5 + 0.5 * lambda; }
  double q() const { return 1.0 - p(); }

  // Throws DomainError unless m <= n.
  void require_correlated() const;
};

struct QfiReport {
  double value = 0.0;        // may be +infinity
  double per_channel = 0.0;  // value / m
  Method method = Method::closed_form;
  ProtocolParams params;

  bool infinite() const { return std::isinf(value); }
};

// x^k with x^0 == 1 for every x, including 0.
inline double ipow(double x, int k) {
  double result = 1.0;
  for (int i = 0; i < k; ++i) result *= x;
  return result;
}

}  // namespace depolqfi
