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

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "mbeam/error.hpp"
#include "mbeam/frames/constructions.hpp"
#include "mbeam/frames/correlation.hpp"
#include "mbeam/frames/difference_set.hpp"
#include "mbeam/frames/frame_io.hpp"
#include "mbeam/frames/registry.hpp"
#include "mbeam/harness/experiments.hpp"

using namespace mbeam;
using C = Complex;

namespace {

std::vector<int> first_rows(int n_t) {
  std::vector<int> r;
  for (int i = 1; i <= n_t; ++i) r.push_back(i);
  return r;
}

double delta(const BeamformingMatrix& f) { return correlation_profile(f).delta_max; }

// Independent brute-force correlation: max over l != n of |b_l^H b_n|.
double brute_force_delta(const ComplexMatrix& m) {
  double best = 0.0;
  for (int l = 0; l < m.cols(); ++l)
    for (int n = 0; n < m.cols(); ++n) {
      if (l == n) continue;
      C acc = 0.0;
      for (int r = 0; r < m.rows(); ++r) acc += std::conj(m(r, l)) * m(r, n);
      best = std::max(best, std::abs(acc));
    }
  return best;
}

}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("closed-form correlation matches the built frame for every lag") {
    for (int nt = 2; nt <= 4; ++nt)
      for (int n = nt; n <= nt * nt; ++n) {
        const auto profile = correlation_profile(fourier_frame(nt, first_rows(nt), n));
        for (int lag = 1; lag < n; ++lag)
          CHECK(profile.at(0, lag) == doctest::Approx(fourier_correlation_closed_form(nt, lag, n)).epsilon(1e-12));
      }
  }

  TEST_CASE("closed form is exactly zero on orthogonal lags") {
    CHECK(fourier_correlation_closed_form(2, 2, 4) == 0.0);
    CHECK(fourier_correlation_closed_form(3, 3, 9) == 0.0);
    CHECK(fourier_correlation_closed_form(3, 0, 9) == 1.0);
  }

  TEST_CASE("first-row correlations") {
    CHECK(delta(fourier_frame(2, first_rows(2))) == doctest::Approx(0.7071).epsilon(1e-4));
    CHECK(delta(fourier_frame(3, first_rows(3))) == doctest::Approx(0.8440).epsilon(1e-4));
    CHECK(delta(fourier_frame(4, first_rows(4))) == doctest::Approx(0.9061).epsilon(1e-4));
    CHECK(delta(fourier_frame(3, first_rows(3), 7)) == doctest::Approx(0.7490).epsilon(1e-4));
    CHECK(delta(fourier_frame(4, first_rows(4), 13)) == doctest::Approx(0.8597).epsilon(1e-4));
  }

  TEST_CASE("tabulated row choices give the tabulated correlations") {
    CHECK(delta(fourier_frame(3, std::vector<int>{3, 7, 9})) == doctest::Approx(0.6565).epsilon(1e-4));
    CHECK(delta(fourier_frame(4, std::vector<int>{1, 10, 12, 13})) == doctest::Approx(0.5817).epsilon(1e-4));
    CHECK(delta(fourier_frame(3, std::vector<int>{1, 2, 4}, 7)) == doctest::Approx(0.4714).epsilon(1e-4));
    CHECK(delta(fourier_frame(4, std::vector<int>{1, 3, 4, 8}, 13)) == doctest::Approx(0.4330).epsilon(1e-4));
  }

  TEST_CASE("row search finds the minimum over every subset") {
    for (auto [nt, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 7}, {3, 9}, {3, 6}}) {
      const auto best = optimal_row_search(nt, n);
      CHECK(delta(fourier_frame(nt, best.selected_rows, n)) == doctest::Approx(best.delta_max).epsilon(1e-12));
      // brute force over all subsets with the library frame builder
      double brute = 2.0;
      std::vector<int> pick(static_cast<std::size_t>(nt));
      std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == nt) {
          brute = std::min(brute, brute_force_delta(fourier_frame(nt, pick, n).matrix()));
          return;
        }
        for (int r = start; r <= n; ++r) {
          pick[static_cast<std::size_t>(depth)] = r;
          rec(r + 1, depth + 1);
        }
      };
      rec(1, 0);
      CHECK(best.delta_max == doctest::Approx(brute).epsilon(1e-12));
    }
  }

  TEST_CASE("row search results for the tabulated sizes") {
    CHECK(optimal_row_search(3).delta_max == doctest::Approx(0.6565).epsilon(1e-4));
    CHECK(optimal_row_search(4).delta_max == doctest::Approx(0.5817).epsilon(1e-4));
    CHECK(optimal_row_search(4, 13).delta_max == doctest::Approx(0.4330).epsilon(1e-4));
    // ties resolve to the lexicographically smallest subset
    CHECK(optimal_row_search(3, 7).selected_rows == std::vector<int>{1, 2, 4});
  }

  TEST_CASE("invalid rows are rejected") {
    CHECK_THROWS_AS(fourier_frame(3, std::vector<int>{1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(fourier_frame(3, std::vector<int>{0, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(fourier_frame(3, std::vector<int>{1, 2}), InvalidArgument);
    CHECK_THROWS_AS(fourier_frame(3, std::vector<int>{1, 2, 10}), InvalidArgument);
    CHECK_THROWS_AS(fourier_frame(3, first_rows(3), 10), InvalidArgument);
  }

  TEST_CASE("Welch bound") {
    CHECK(welch_lower_bound(2, 4) == doctest::Approx(0.5774).epsilon(1e-4));
    CHECK(welch_lower_bound(3, 7) == doctest::Approx(0.4714).epsilon(1e-4));
    CHECK(welch_lower_bound(3, 9) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(welch_lower_bound(4, 13) == doctest::Approx(0.4330).epsilon(1e-4));
    CHECK(welch_lower_bound(4, 16) == doctest::Approx(0.4472).epsilon(1e-4));
    CHECK(welch_lower_bound(3, 3) == 0.0);
  }
}

TEST_SUITE("grassmannian") {
  TEST_CASE("printed 2 x 4 frame is equiangular at the bound") {
    const auto f = grassmannian_2x4();
    const auto p = correlation_profile(f);
    for (double c : p.off_diagonal()) CHECK(c == doctest::Approx(0.5774).epsilon(2e-4));
    CHECK(p.delta_hat_sq.has_value());
    CHECK(*p.delta_hat_sq == doctest::Approx(1.0).epsilon(1e-3));
  }

  TEST_CASE("harmonic (3,7) frame reproduces the printed entries") {
    const std::vector<std::vector<C>> printed{
        {0.5774, C(0.3600, 0.4514), C(-0.1285, -0.5629)}, {0.5774, C(-0.1285, 0.5629), C(-0.5202, 0.2505)},
        {0.5774, C(-0.5202, 0.2505), C(0.3600, 0.4514)},  {0.5774, C(-0.5202, -0.2505), C(0.3600, -0.4514)},
        {0.5774, C(-0.1285, -0.5629), C(-0.5202, -0.2505)}, {0.5774, C(0.3600, -0.4514), C(-0.1285, 0.5629)},
        {0.5774, 0.5774, 0.5774}};
    const auto f = harmonic_frame(3, DifferenceSet::validated(7, {0, 1, 5}));
    for (int n = 0; n < 7; ++n)
      for (int i = 0; i < 3; ++i)
        CHECK(std::abs(f.matrix()(i, n) - printed[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]) < 1e-4);
    CHECK(delta(f) == doctest::Approx(0.4714).epsilon(1e-4));
  }

  TEST_CASE("harmonic frames are equiangular tight frames") {
    for (const auto& [nt, d] : std::vector<std::pair<int, std::vector<int>>>{{3, {0, 1, 3}}, {3, {0, 1, 5}}, {4, {0, 1, 3, 9}}}) {
      const int n = nt * nt - nt + 1;
      const auto f = harmonic_frame(nt, DifferenceSet::validated(n, d));
      const double bound = welch_lower_bound(nt, n);
      for (double c : correlation_profile(f).off_diagonal()) CHECK(c == doctest::Approx(bound).epsilon(1e-12));
      // tight: B B^H = (N / n_t) I
      auto frame_op = f.matrix() * f.matrix().adjoint();
      auto expected = ComplexMatrix::identity(nt);
      expected *= C(static_cast<double>(n) / nt, 0.0);
      CHECK(frame_op.max_abs_diff(expected) < 1e-12);
    }
  }
}

TEST_SUITE("difference_set") {
  TEST_CASE("lexicographic search") {
    CHECK(difference_set_search(3).elements == std::vector<int>{0, 1, 3});
    CHECK(difference_set_search(4).elements == std::vector<int>{0, 1, 3, 9});
    CHECK(find_perfect_difference_set(21, 5).has_value());
    CHECK_FALSE(find_perfect_difference_set(8, 3).has_value());
    CHECK_THROWS_AS(difference_set_search(2), InvalidArgument);
  }

  TEST_CASE("perfection checks") {
    CHECK(is_perfect_difference_set(7, std::vector<int>{0, 1, 5}));
    CHECK_FALSE(is_perfect_difference_set(7, std::vector<int>{0, 1, 2}));
    CHECK_THROWS_AS(DifferenceSet::validated(7, {0, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(DifferenceSet::validated(7, {0, 3, 1}), InvalidArgument);
    CHECK_THROWS_AS(DifferenceSet::validated(7, {0, 1, 7}), InvalidArgument);
  }
}

TEST_SUITE("mub") {
  TEST_CASE("generators have order n_t + 1") {
    for (int nt : {2, 4}) {
      const auto d = mub_generator(nt);
      CHECK((d.adjoint() * d).max_abs_diff(ComplexMatrix::identity(nt)) < 1e-15);
      CHECK(d.power(nt + 1).max_abs_diff(ComplexMatrix::identity(nt)) < 1e-12);
    }
  }

  TEST_CASE("2 x 4 frame equals the printed matrix") {
    auto printed = ComplexMatrix::from_rows({{-1.0, C(0, 1), C(0, 1), C(0, -1)}, {1.0, C(0, 1), -1.0, -1.0}});
    printed *= C(0.5, 0.5);
    CHECK(mub_frame(2).matrix().max_abs_diff(printed) < 1e-15);
  }

  TEST_CASE("4 x 16 frame equals the printed matrix except one misprinted sign") {
    const C j(0, 1);
    auto printed = ComplexMatrix::from_rows({
        {-j, -j, -j, -j, -1.0, -1.0, -j, j, -1.0, j, j, 1.0, j, 1.0, j, -1.0},
        {1.0, -1.0, 1.0, -1.0, -j, -j, -1.0, 1.0, -1.0, j, -j, -1.0, j, -1.0, j, 1.0},
        {-j, -j, j, j, -j, j, -1.0, -1.0, j, -1.0, -1.0, -j, j, 1.0, -j, 1.0},
        {1.0, 1.0, 1.0, -1.0, 1.0, -1.0, j, j, -j, 1.0, -1.0, -j, j, -1.0, -j, -1.0},
    });
    printed *= C(0.5, 0.0);
    const auto& built = mub_frame(4).matrix();
    int differing = 0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 16; ++c)
        if (std::abs(built(r, c) - printed(r, c)) > 1e-12) {
          ++differing;
          CHECK(r == 3);
          CHECK(c == 0);
          CHECK(std::abs(built(r, c) + printed(r, c)) < 1e-12);
        }
    CHECK(differing == 1);
  }

  TEST_CASE("bases are orthonormal and mutually unbiased") {
    for (int nt : {2, 4}) {
      const auto p = correlation_profile(mub_frame(nt));
      for (int l = 0; l < nt * nt; ++l)
        for (int n = 0; n < nt * nt; ++n) {
          if (l == n) continue;
          const double want = l / nt == n / nt ? 0.0 : 1.0 / std::sqrt(static_cast<double>(nt));
          CHECK(p.at(l, n) == doctest::Approx(want).epsilon(1e-12));
        }
    }
  }

  TEST_CASE("n_t = 3 is rejected with an explanation") {
    try {
      mub_generator(3);
      FAIL("expected InvalidArgument");
    } catch (const InvalidArgument& e) {
      CHECK(std::string(e.what()).find("power of 2") != std::string::npos);
    }
  }
}

TEST_SUITE("correlation") {
  TEST_CASE("interference constants of the tabulated frames") {
    CHECK(*correlation_profile(build_frame(max_beam_grassmannian(3))).delta_hat_sq == doctest::Approx(4.0 / 3.0));
    CHECK(*correlation_profile(build_frame(max_beam_grassmannian(4))).delta_hat_sq == doctest::Approx(2.25));
    CHECK(*correlation_profile(build_frame({"fourier-opt", 3, 9, {}, {}})).delta_hat_sq == doctest::Approx(2.0));
    CHECK(*correlation_profile(mub_frame(4)).delta_hat_sq == doctest::Approx(3.0));
  }

  TEST_CASE("per-column sums equal (N - n_t)/n_t for tight frames") {
    for (const auto& spec : default_report_constructions()) {
      const auto f = build_frame(spec);
      const auto p = correlation_profile(f);
      if (spec.kind == "grassmannian" && spec.n_t == 2) continue;  // printed entries
      REQUIRE(p.delta_hat_sq.has_value());
      CHECK(*p.delta_hat_sq == doctest::Approx(static_cast<double>(f.n_beams() - f.n_t()) / f.n_t()).epsilon(1e-12));
    }
  }

  TEST_CASE("non-uniform frames carry no interference constant") {
    const double s = 1.0 / std::sqrt(2.0);
    auto m = ComplexMatrix::from_rows({{1.0, s, 0.0}, {0.0, s, 1.0}});
    m(0, 2) = 0.6;
    m(1, 2) = 0.8;
    const BeamformingMatrix f(m, Construction{ConstructionKind::kFourier, {1, 2}, {}});
    const auto p = correlation_profile(f);
    CHECK_FALSE(p.delta_hat_sq.has_value());
    CHECK_THROWS_AS(require_delta_hat_sq(p), InvalidArgument);
    CHECK(p.delta_max == doctest::Approx(brute_force_delta(m)));
  }
}

TEST_SUITE("randomization") {
  TEST_CASE("phase rotation keeps correlations, norms and label") {
    const auto base = build_frame(max_beam_grassmannian(4));
    RandomStream stream(11, 0);
    const auto rotated = randomize_phases(base, stream);
    CHECK(rotated.construction() == base.construction());
    const auto a = correlation_profile(base);
    const auto b = correlation_profile(rotated);
    for (std::size_t i = 0; i < a.pairwise.size(); ++i) CHECK(std::abs(a.pairwise[i] - b.pairwise[i]) < 1e-12);
    CHECK(rotated.matrix().max_abs_diff(base.matrix()) > 0.1);
  }

  TEST_CASE("explicit angles") {
    const auto base = build_frame({"fourier", 2, 4, {}, {}});
    const std::vector<double> angles{0.0, std::numbers::pi / 2, std::numbers::pi, 0.0};
    const auto r = randomize_phases(base, angles);
    CHECK(std::abs(r.matrix()(1, 1) - C(0, 1) * base.matrix()(1, 1)) < 1e-15);
    CHECK(std::abs(r.matrix()(0, 2) + base.matrix()(0, 2)) < 1e-15);
    CHECK_THROWS_AS(randomize_phases(base, std::vector<double>{0.0}), InvalidArgument);
  }

  TEST_CASE("random orthonormal bases are unitary and seed-determined") {
    RandomStream a(3, 9);
    RandomStream b(3, 9);
    const auto u = random_orthonormal(4, a);
    CHECK((u.matrix().adjoint() * u.matrix()).max_abs_diff(ComplexMatrix::identity(4)) < 1e-13);
    CHECK(random_orthonormal(4, b).matrix().max_abs_diff(u.matrix()) == 0.0);
  }
}

TEST_SUITE("registry_and_io") {
  TEST_CASE("resolve fills defaults") {
    const auto g = resolve({"grassmannian", 4, 0, {}, {}});
    CHECK(g.n_beams == 13);
    CHECK(resolve({"grassmannian", 2, 0, {}, {}}).n_beams == 4);
    CHECK(resolve({"fourier", 3, 0, {}, {}}).rows == std::vector<int>{1, 2, 3});
    CHECK(resolve({"harmonic", 3, 0, {}, {}}).difference_set == std::vector<int>{0, 1, 3});
    CHECK(resolve({"orthonormal", 4, 0, {}, {}}).n_beams == 4);
  }

  TEST_CASE("resolve rejects unavailable combinations") {
    CHECK_THROWS_AS(resolve({"mub", 3, 0, {}, {}}), InvalidArgument);
    CHECK_THROWS_AS(resolve({"grassmannian", 3, 9, {}, {}}), InvalidArgument);
    CHECK_THROWS_AS(resolve({"fourier", 3, 10, {}, {}}), InvalidArgument);
    CHECK_THROWS_AS(resolve({"nope", 3, 0, {}, {}}), InvalidArgument);
    CHECK_THROWS_AS(resolve({"fourier", 5, 0, {}, {}}), InvalidArgument);
    CHECK_THROWS_AS(resolve({"harmonic", 3, 0, {}, {0, 1, 2}}), InvalidArgument);
  }

  TEST_CASE("labels round-trip") {
    for (const auto& spec : default_report_constructions()) {
      const auto c = build_frame(spec).construction();
      CHECK(Construction::parse(c.label()) == c);
    }
    CHECK(Construction{ConstructionKind::kFourier, {3, 7, 9}, {}}.label() == "fourier{3,7,9}");
    CHECK_THROWS_AS(Construction::parse("fourier{3,x}"), InvalidArgument);
  }

  TEST_CASE("JSON round trip is lossless") {
    for (const auto& spec : default_report_constructions()) {
      const auto f = build_frame(spec);
      RandomStream s(1, 1);
      const auto rotated = spec.kind == "orthonormal" ? random_orthonormal(f.n_t(), s) : randomize_phases(f, s);
      const auto back = frame_from_json(nlohmann::json::parse(frame_to_json(rotated).dump()));
      CHECK(back.matrix().max_abs_diff(rotated.matrix()) == 0.0);
      CHECK(back.construction() == rotated.construction());
    }
  }

  TEST_CASE("malformed frame files are rejected") {
    CHECK_THROWS_AS(frame_from_json(nlohmann::json{{"n_t", 2}}), InvalidArgument);
    auto j = frame_to_json(build_frame({"fourier", 2, 4, {}, {}}));
    j["entries"][0] = {3.0, 0.0};
    CHECK_THROWS_AS(frame_from_json(j), InvalidArgument);
  }

  TEST_CASE("frame spec JSON accepts objects and bare names") {
    CHECK(nlohmann::json("mub").get<FrameSpec>().kind == "mub");
    const FrameSpec s = nlohmann::json{{"kind", "fourier"}, {"n_t", 3}, {"n_beams", 9}, {"rows", {3, 7, 9}}};
    CHECK(s.rows == std::vector<int>{3, 7, 9});
    CHECK(nlohmann::json(s).get<FrameSpec>() == s);
  }
}
