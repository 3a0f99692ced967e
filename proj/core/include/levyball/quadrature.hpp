#pragma once

#include <functional>
#include <span>
#include <vector>

namespace levyball {

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

struct QuadOutcome {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  bool converged = false;
};

/// Gauss-Legendre rule of order n on [-1, 1]; nodes and weights are computed
/// once by Newton iteration on the Legendre recurrence and cached.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  double integrate(const std::function<double(double)>& f, double a,
                   double b) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Globally adaptive integration over the union of [edges[i], edges[i+1]].
/// Edges must be strictly increasing; kinks of the integrand belong on the
/// edge list. The error estimate per panel is the difference between nested
/// Gauss rules; the worst panel is bisected until the global estimate meets
/// max(abs_tol, rel_tol * |value|) or the subdivision budget runs out.
QuadOutcome adaptive_integrate(const std::function<double(double)>& f,
                               std::span<const double> edges,
                               const QuadOptions& options = {});

}  // namespace levyball
