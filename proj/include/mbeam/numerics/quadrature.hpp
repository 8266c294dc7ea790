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

#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace mbeam {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct QuadratureOptions {
  double abs_tol = 1e-8;
  /// Refinement budget: total number of live subintervals.
  int max_intervals = 20000;
  /// Each initial segment (between consecutive breakpoints) is split into
  /// this many equal pieces before adaptive refinement starts.
  int initial_subdivisions = 8;
  /// Interior points where the integrand is known to be peaked or kinked.
  /// Initial pieces are graded geometrically toward each of them, so a
  /// narrow feature sitting on a breakpoint is always sampled. Points
  /// outside (lower, upper) are ignored.
  std::vector<double> breakpoints;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
  int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over
/// [lower, upper]. Either limit may be infinite; infinite ranges are mapped
/// onto a bounded interval by x = a + t/(1-t) (half line) or
/// x = t/(1-t^2) (whole line). Throws ConvergenceError when the interval
/// budget is exhausted before the summed error estimate drops below abs_tol,
/// or when f returns a non-finite value.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower,
                                    double upper, const QuadratureOptions& options = {});

/// Convenience wrapper returning only the value.
double integrate(const std::function<double(double)>& f, double lower, double upper,
                 double abs_tol = 1e-8);

}  // namespace mbeam
