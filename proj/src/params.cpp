#include "depolqfi/params.hpp"

#include <string>

#include "depolqfi/errors.hpp"

namespace depolqfi {

std::string_view to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::sqsc: return "sqsc";
    case Protocol::independent: return "independent";
    case Protocol::sequential: return "sequential";
    case Protocol::correlated: return "correlated";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::closed_form: return "closed_form";
    case Method::oracle: return "oracle";
    case Method::limit: return "limit";
  }
  return "unknown";
}

void require_polarization(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("polarization r = " + std::to_string(r) + " violates 0 <= r <= 1");
  }
}

void require_channel_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError("lambda = " + std::to_string(lambda) + " violates 0 <= lambda < 1");
  }
}

void require_closed_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lambda = " + std::to_string(lambda) + " violates 0 <= lambda <= 1");
  }
}

void require_invocations(int m) {
  if (m < 1) throw DomainError("channel invocations m = " + std::to_string(m) + " violates m >= 1");
}

ProtocolParams ProtocolParams::make(int n, int m, double r, double lambda) {
  if (n < 1) throw DomainError("qubit count n = " + std::to_string(n) + " violates n >= 1");
  require_invocations(m);
  require_polarization(r);
  require_channel_lambda(lambda);
  return ProtocolParams{n, m, r, lambda, false};
}

ProtocolParams ProtocolParams::at_unit_lambda(int n, int m, double r) {
  if (n < 1) throw DomainError("qubit count n = " + std::to_string(n) + " violates n >= 1");
  require_invocations(m);
  require_polarization(r);
  return ProtocolParams{n, m, r, 1.0, true};
}

void ProtocolParams::require_correlated() const {
  if (m > n) {
    throw DomainError("channel invocations m = " + std::to_string(m) +
                      " violates m <= n = " + std::to_string(n));
  }
}

}  // namespace depolqfi
