#include "levyball/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace levyball {

GaussLegendre::GaussLegendre(int n) {
  if (n < 2) throw std::invalid_argument("GaussLegendre: order too small");
  nodes_.resize(n);
  weights_.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
}

double GaussLegendre::integrate(const std::function<double(double)>& f,
                                double a, double b) const {
  const double mid = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    acc += weights_[i] * f(mid + halfwidth * nodes_[i]);
  }
  return acc * halfwidth;
}

namespace {

struct Panel {
  double a, b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    return lhs.error < rhs.error;
  }
};

const GaussLegendre& coarse_rule() {
  static const GaussLegendre rule(12);
  return rule;
}

const GaussLegendre& fine_rule() {
  static const GaussLegendre rule(24);
  return rule;
}

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double coarse = coarse_rule().integrate(f, a, b);
  const double fine = fine_rule().integrate(f, a, b);
  return {a, b, fine, std::abs(fine - coarse)};
}

}  // namespace

QuadOutcome adaptive_integrate(const std::function<double(double)>& f,
                               std::span<const double> edges,
                               const QuadOptions& options) {
  if (edges.size() < 2) {
    throw std::invalid_argument("adaptive_integrate: need at least two edges");
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) {
      throw std::invalid_argument("adaptive_integrate: edges must increase strictly");
    }
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  double value = 0.0;
  double error = 0.0;
  int used = 0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    Panel p = evaluate_panel(f, edges[i - 1], edges[i]);
    value += p.value;
    error += p.error;
    queue.push(p);
    ++used;
  }

  const auto target = [&] {
    return std::max(options.abs_tol, options.rel_tol * std::abs(value));
  };

  double stuck = 0.0;  // error stranded on panels at double-precision width
  while (error > target() && used < options.max_subdivisions) {
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      error -= worst.error;
      stuck += worst.error;
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++used;
  }

  QuadOutcome out;
  out.value = value;
  out.error_estimate = error + stuck;
  out.subdivisions_used = used;
  out.converged = out.error_estimate <= target();
  return out;
}

}  // namespace levyball
