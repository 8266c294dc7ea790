// Copyright 2026 The mbeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbeam/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "mbeam/error.hpp"

namespace mbeam {
namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

// Integrand already expressed in the bounded variable t.
using Mapped = std::function<double(double)>;

Segment gauss_kronrod(const Mapped& g, double a, double b, int& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  evaluations += 15;
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

// Halvings of the first piece on each side of an interior breakpoint.
constexpr int kGradingLevels = 24;

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower,
                                    double upper, const QuadratureOptions& options) {
  require(options.abs_tol > 0.0, "integrate: abs_tol must be positive");
  require(!std::isnan(lower) && !std::isnan(upper), "integrate: limits must not be NaN");
  if (lower == upper) return {};
  if (lower > upper) {
    QuadratureResult r = integrate_adaptive(f, upper, lower, options);
    r.value = -r.value;
    return r;
  }

  // Map to a bounded variable t with forward map x(t), jacobian, and inverse.
  std::function<double(double)> to_x;
  std::function<double(double)> jacobian;
  std::function<double(double)> to_t;
  double t_lo = lower;
  double t_hi = upper;
  const bool lo_inf = std::isinf(lower);
  const bool hi_inf = std::isinf(upper);
  if (lo_inf && hi_inf) {
    to_x = [](double t) { return t / (1.0 - t * t); };
    jacobian = [](double t) { const double d = 1.0 - t * t; return (1.0 + t * t) / (d * d); };
    to_t = [](double x) { return x == 0.0 ? 0.0 : (std::sqrt(1.0 + 4.0 * x * x) - 1.0) / (2.0 * x); };
    t_lo = -1.0;
    t_hi = 1.0;
  } else if (hi_inf) {
    to_x = [lower](double t) { return lower + t / (1.0 - t); };
    jacobian = [](double t) { const double d = 1.0 - t; return 1.0 / (d * d); };
    to_t = [lower](double x) { const double s = x - lower; return s / (1.0 + s); };
    t_lo = 0.0;
    t_hi = 1.0;
  } else if (lo_inf) {
    // x = upper - s/(1-s); orientation flips, absorbed by integrating s over [0,1).
    to_x = [upper](double s) { return upper - s / (1.0 - s); };
    jacobian = [](double s) { const double d = 1.0 - s; return 1.0 / (d * d); };
    to_t = [upper](double x) { const double s = upper - x; return s / (1.0 + s); };
    t_lo = 0.0;
    t_hi = 1.0;
  } else {
    to_x = [](double t) { return t; };
    jacobian = [](double) { return 1.0; };
    to_t = [](double x) { return x; };
  }

  QuadratureResult result;
  const Mapped g = [&](double t) {
    const double v = f(to_x(t)) * jacobian(t);
    if (!std::isfinite(v)) {
      // The mapped endpoints are never sampled; a non-finite value is the
      // integrand's own fault, unless it is the 0*inf of a vanishing tail.
      if (std::isinf(jacobian(t)) || std::isinf(to_x(t))) return 0.0;
      throw ConvergenceError("integrate: integrand is not finite at x = " + std::to_string(to_x(t)));
    }
    return v;
  };

  std::vector<double> cuts{t_lo, t_hi};
  for (double x : options.breakpoints) {
    if (x > lower && x < upper) {
      const double t = to_t(x);
      if (t > t_lo && t < t_hi) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment> heap;
  double total = 0.0;
  double total_error = 0.0;
  const int pieces = std::max(1, options.initial_subdivisions);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double width = (hi - lo) / pieces;
    std::vector<double> edges;
    for (int p = 0; p < pieces; ++p) edges.push_back(lo + p * width);
    edges.push_back(hi);
    // Grade geometrically toward interior breakpoints so that a feature
    // sitting on one is sampled from both sides.
    for (int k = 1; k <= kGradingLevels; ++k) {
      const double offset = width * std::ldexp(1.0, -k);
      if (i > 0) edges.push_back(lo + offset);
      if (i + 2 < cuts.size()) edges.push_back(hi - offset);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      Segment s = gauss_kronrod(g, edges[e], edges[e + 1], result.evaluations);
      total += s.value;
      total_error += s.error;
      heap.push(s);
    }
  }

  while (total_error > options.abs_tol) {
    if (static_cast<int>(heap.size()) >= options.max_intervals) {
      throw ConvergenceError("integrate: refinement budget exhausted (error estimate " +
                             std::to_string(total_error) + " > tolerance " +
                             std::to_string(options.abs_tol) + ")");
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("integrate: interval cannot be subdivided further");
    }
    Segment left = gauss_kronrod(g, worst.a, mid, result.evaluations);
    Segment right = gauss_kronrod(g, mid, worst.b, result.evaluations);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from scratch to shed the drift of incremental updates.
  double value = 0.0;
  double error = 0.0;
  std::vector<Segment> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  for (const auto& s : segments) {
    value += s.value;
    error += s.error;
  }
  result.value = value;
  result.error_estimate = error;
  result.intervals = static_cast<int>(segments.size());
  return result;
}

double integrate(const std::function<double(double)>& f, double lower, double upper, double abs_tol) {
  QuadratureOptions options;
  options.abs_tol = abs_tol;
  return integrate_adaptive(f, lower, upper, options).value;
}

}  // namespace mbeam
