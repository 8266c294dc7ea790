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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <vector>

#include "mbeam/error.hpp"
#include "mbeam/numerics/complex_matrix.hpp"
#include "mbeam/numerics/quadrature.hpp"
#include "mbeam/numerics/random_stream.hpp"
#include "mbeam/numerics/statistics.hpp"

#ifdef MBEAM_HAVE_BOOST_QUADRATURE
#include <boost/math/quadrature/exp_sinh.hpp>
#endif

using namespace mbeam;

TEST_SUITE("philox") {
  // Known-answer vectors published with the Random123 reference implementation.
  TEST_CASE("zero counter and key") {
    const auto out = philox4x32({0, 0, 0, 0}, {0, 0});
    CHECK(out == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  }

  TEST_CASE("all-ones counter and key") {
    const auto out = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
    CHECK(out == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  }

  TEST_CASE("pi digits") {
    const auto out = philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
    CHECK(out == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
  }
}

TEST_SUITE("random_stream") {
  TEST_CASE("first block is the block function at counter (0, 0, sub_lo, sub_hi)") {
    const std::uint64_t seed = 0x0123456789abcdefULL;
    const std::uint64_t sub = 0xfedcba9876543210ULL;
    RandomStream s(seed, sub);
    const auto block = philox4x32({0, 0, 0x76543210u, 0xfedcba98u}, {0x89abcdefu, 0x01234567u});
    for (auto word : block) CHECK(s.next_u32() == word);
  }

  TEST_CASE("streams are reproducible and substreams differ") {
    RandomStream a = derive_stream(42, 7);
    RandomStream b = derive_stream(42, 7);
    RandomStream c = derive_stream(42, 8);
    RandomStream d = derive_stream(43, 7);
    bool differs_c = false;
    bool differs_d = false;
    for (int i = 0; i < 100; ++i) {
      const auto x = a.next_u64();
      CHECK(x == b.next_u64());
      differs_c = differs_c || x != c.next_u64();
      differs_d = differs_d || x != d.next_u64();
    }
    CHECK(differs_c);
    CHECK(differs_d);
  }

  TEST_CASE("a copied stream replays") {
    RandomStream a(1, 2);
    a.next_u32();
    RandomStream b = a;
    for (int i = 0; i < 10; ++i) CHECK(a.uniform() == b.uniform());
  }

  TEST_CASE("uniforms stay in range with the right mean") {
    RandomStream s(5, 0);
    double sum = 0.0;
    constexpr int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double u = s.uniform();
      const double v = s.uniform_open();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
      REQUIRE(v > 0.0);
      REQUIRE(v < 1.0);
      sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
  }

  TEST_CASE("complex gaussian has the requested second moments") {
    RandomStream s(9, 3);
    constexpr int n = 200000;
    double power = 0.0;
    double re2 = 0.0;
    double mean_re = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex z = sample_complex_gaussian(s, 2.0);
      power += std::norm(z);
      re2 += z.real() * z.real();
      mean_re += z.real();
    }
    CHECK(power / n == doctest::Approx(2.0).epsilon(0.01));
    CHECK(re2 / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(mean_re / n) < 0.01);
  }

  TEST_CASE("complex gaussian consumes exactly two uniforms") {
    RandomStream a(3, 3);
    RandomStream b(3, 3);
    sample_complex_gaussian(a, 1.0);
    b.uniform();
    b.uniform();
    CHECK(a.next_u64() == b.next_u64());
  }

  TEST_CASE("non-positive variance is rejected") {
    RandomStream s(1, 1);
    CHECK_THROWS_AS(sample_complex_gaussian(s, 0.0), InvalidArgument);
  }
}

TEST_SUITE("complex_matrix") {
  TEST_CASE("products, adjoints and powers") {
    const auto a = ComplexMatrix::from_rows({{1.0, Complex(0, 1)}, {2.0, 3.0}});
    const auto ah = a.adjoint();
    CHECK(ah(0, 1) == Complex(2.0, 0.0));
    CHECK(ah(1, 0) == Complex(0.0, -1.0));
    const auto p = a * ComplexMatrix::identity(2);
    CHECK(p.max_abs_diff(a) == 0.0);
    const auto sq = a.power(2);
    CHECK(sq.max_abs_diff(a * a) < 1e-15);
    CHECK(a.power(0).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
  }

  TEST_CASE("inner is conjugating and dot is not") {
    const std::vector<Complex> u{Complex(0, 1), 1.0};
    const std::vector<Complex> v{Complex(0, 1), 2.0};
    CHECK(inner(u, v) == Complex(3.0, 0.0));
    CHECK(dot(u, v) == Complex(1.0, 0.0));
    CHECK(norm(u) == doctest::Approx(std::sqrt(2.0)));
  }

  TEST_CASE("Gram-Schmidt yields orthonormal columns") {
    auto m = ComplexMatrix::from_rows({{1.0, 1.0, 0.0}, {Complex(0, 1), 2.0, 1.0}, {0.0, 1.0, 3.0}});
    orthonormalize_columns(m);
    CHECK((m.adjoint() * m).max_abs_diff(ComplexMatrix::identity(3)) < 1e-14);
  }

  TEST_CASE("dependent columns are rejected") {
    auto m = ComplexMatrix::from_rows({{1.0, 2.0}, {1.0, 2.0}});
    CHECK_THROWS_AS(orthonormalize_columns(m), InvalidArgument);
  }

  TEST_CASE("shape mismatches throw") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2) * ComplexMatrix(3, 1), InvalidArgument);
    CHECK_THROWS_AS(ComplexMatrix(2, 3).power(2), InvalidArgument);
  }
}

TEST_SUITE("quadrature") {
  TEST_CASE("polynomial on a finite interval") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  }

  TEST_CASE("half-line and whole-line maps") {
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, kInfinity) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -kInfinity, kInfinity) ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::exp(x); }, -kInfinity, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
  }

  TEST_CASE("breakpoints handle kinks") {
    QuadratureOptions opts;
    opts.breakpoints = {0.3};
    opts.abs_tol = 1e-13;
    const auto r = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, opts);
    CHECK(r.value == doctest::Approx(0.045 + 0.245).epsilon(1e-13));
    CHECK(r.error_estimate <= 1e-13);
  }

  TEST_CASE("narrow peak on the half line") {
    QuadratureOptions opts;
    opts.breakpoints = {50.0};
    const double width = 0.2;
    const auto f = [&](double x) { return std::exp(-0.5 * std::pow((x - 50.0) / width, 2)); };
    CHECK(integrate_adaptive(f, 0.0, kInfinity, opts).value ==
          doctest::Approx(width * std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-9));
  }

  TEST_CASE("non-finite integrand raises ConvergenceError") {
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), ConvergenceError);
  }

  TEST_CASE("exhausted budget raises ConvergenceError") {
    QuadratureOptions opts;
    opts.max_intervals = 20;
    opts.abs_tol = 1e-14;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, opts), ConvergenceError);
  }

  TEST_CASE("reversed or empty ranges") {
    CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
    CHECK(integrate([](double) { return 1.0; }, 2.0, 1.0) == doctest::Approx(-1.0));
    QuadratureOptions bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, bad), InvalidArgument);
  }

#ifdef MBEAM_HAVE_BOOST_QUADRATURE
  TEST_CASE("doubly exponential kernel agrees with an exp-sinh oracle") {
    const double a = 0.4598;
    const double b = 0.04278;
    const auto f = [&](double g) {
      const double t = -(g - a) / b;
      return std::log2(1.0 + g) * std::exp(t - std::exp(t)) / b;
    };
    boost::math::quadrature::exp_sinh<double> oracle;
    const double want = oracle.integrate(f, 0.0, std::numeric_limits<double>::infinity());
    QuadratureOptions opts;
    opts.breakpoints = {a};
    opts.abs_tol = 1e-12;
    CHECK(integrate_adaptive(f, 0.0, kInfinity, opts).value == doctest::Approx(want).epsilon(1e-10));
  }
#endif
}

TEST_SUITE("statistics") {
  TEST_CASE("KS statistic of small samples") {
    const auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    const std::vector<double> one{0.5};
    CHECK(ks_statistic(one, uniform) == doctest::Approx(0.5));
    const std::vector<double> grid{0.125, 0.375, 0.625, 0.875};
    CHECK(ks_statistic(grid, uniform) == doctest::Approx(0.125));
    CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, uniform), InvalidArgument);
  }
}
