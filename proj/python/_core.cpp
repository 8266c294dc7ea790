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


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "mbeam/channel/monte_carlo.hpp"
#include "mbeam/error.hpp"
#include "mbeam/evt/extreme_value.hpp"
#include "mbeam/evt/kl_divergence.hpp"
#include "mbeam/evt/sinr_model.hpp"
#include "mbeam/evt/throughput_bounds.hpp"
#include "mbeam/frames/constructions.hpp"
#include "mbeam/frames/correlation.hpp"
#include "mbeam/frames/registry.hpp"
#include "mbeam/harness/experiments.hpp"
#include "mbeam/harness/table.hpp"
#include "mbeam/harness/verify.hpp"

namespace py = pybind11;

namespace {

py::array_t<std::complex<double>> to_numpy(const mbeam::ComplexMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
  return out;
}

mbeam::FrameSpec frame_spec(const std::string& kind, int n_t, int n_beams, std::vector<int> rows,
                            std::vector<int> difference_set) {
  return mbeam::FrameSpec{kind, n_t, n_beams, std::move(rows), std::move(difference_set)};
}

py::dict correlation_dict(const mbeam::BeamformingMatrix& frame) {
  const auto p = mbeam::correlation_profile(frame);
  py::dict d;
  d["delta_max"] = p.delta_max;
  d["delta_hat_sq"] = p.delta_hat_sq ? py::cast(*p.delta_hat_sq) : py::none();
  d["per_column_delta_sq"] = p.per_column_delta_sq;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Correlated-beam opportunistic beamforming: frames, channel simulation and extreme-value analysis";
  m.attr("__version__") = mbeam::artifact_version();

  py::register_exception<mbeam::InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<mbeam::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  // frames
  m.def("registered_constructions", &mbeam::registered_constructions);
  m.def(
      "frame_matrix",
      [](const std::string& kind, int n_t, int n_beams, std::vector<int> rows, std::vector<int> ds) {
        return to_numpy(mbeam::build_frame(frame_spec(kind, n_t, n_beams, std::move(rows), std::move(ds))).matrix());
      },
      py::arg("kind"), py::arg("n_t"), py::arg("n_beams") = 0, py::arg("rows") = std::vector<int>{},
      py::arg("difference_set") = std::vector<int>{}, "Beamforming matrix with one beam per column.");
  m.def(
      "frame_correlation",
      [](const std::string& kind, int n_t, int n_beams, std::vector<int> rows, std::vector<int> ds) {
        return correlation_dict(mbeam::build_frame(frame_spec(kind, n_t, n_beams, std::move(rows), std::move(ds))));
      },
      py::arg("kind"), py::arg("n_t"), py::arg("n_beams") = 0, py::arg("rows") = std::vector<int>{},
      py::arg("difference_set") = std::vector<int>{});
  m.def(
      "frame_label",
      [](const std::string& kind, int n_t, int n_beams) {
        return mbeam::build_frame(frame_spec(kind, n_t, n_beams, {}, {})).construction().label();
      },
      py::arg("kind"), py::arg("n_t"), py::arg("n_beams") = 0);
  m.def("welch_lower_bound", &mbeam::welch_lower_bound, py::arg("n_t"), py::arg("n_beams"));
  m.def(
      "optimal_row_search",
      [](int n_t, int n_beams) {
        const auto r = mbeam::optimal_row_search(n_t, n_beams);
        return py::make_tuple(r.selected_rows, r.delta_max);
      },
      py::arg("n_t"), py::arg("n_beams") = 0);

  // evt
  py::class_<mbeam::SinrModel>(m, "SinrModel")
      .def(py::init([](double m_, int n, double rho, double dhs) {
             mbeam::SinrModel s{m_, n, rho, dhs};
             s.validate();
             return s;
           }),
           py::arg("m"), py::arg("n_beams"), py::arg("rho"), py::arg("delta_hat_sq"))
      .def_readonly("m", &mbeam::SinrModel::m)
      .def_readonly("n_beams", &mbeam::SinrModel::n_beams)
      .def_readonly("rho", &mbeam::SinrModel::rho)
      .def_readonly("delta_hat_sq", &mbeam::SinrModel::delta_hat_sq)
      .def("pdf", [](const mbeam::SinrModel& s, double g) { return mbeam::sinr_pdf(s, g); })
      .def("cdf", [](const mbeam::SinrModel& s, double g) { return mbeam::sinr_cdf(s, g); })
      .def("growth", [](const mbeam::SinrModel& s, double g) { return mbeam::growth_function(s, g); });

  m.def(
      "gumbel_params",
      [](const mbeam::SinrModel& s, int k) {
        const auto p = mbeam::gumbel_params(s, k);
        return py::make_tuple(p.a, p.b);
      },
      py::arg("model"), py::arg("users"), "Position a and scale b of the limiting law.");
  m.def(
      "extreme_cdf", [](double a, double b, int n, double g) { return mbeam::extreme_cdf({a, b}, n, g); },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("gamma"));
  m.def(
      "extreme_pdf", [](double a, double b, int n, double g) { return mbeam::extreme_pdf({a, b}, n, g); },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("gamma"));
  m.def(
      "kl_divergence", [](const mbeam::SinrModel& s, int k) { return mbeam::kl_divergence(s, k).divergence_bits; },
      py::arg("model"), py::arg("users"), "Divergence in bits between the exact max law and its Gumbel limit.");
  m.def("throughput_upper_numeric", &mbeam::throughput_upper_numeric, py::arg("model"), py::arg("users"));
  m.def("throughput_lower_numeric", &mbeam::throughput_lower_numeric, py::arg("model"), py::arg("users"));
  m.def("throughput_closed_form", &mbeam::throughput_closed_form, py::arg("model"), py::arg("users"));
  m.def("throughput_exact_max_law", &mbeam::throughput_exact_max_law, py::arg("model"), py::arg("users"));

  // channel
  m.def(
      "monte_carlo",
      [](const std::string& kind, int n_t, int n_beams, int users, double fading, double snr_db, std::int64_t slots,
         std::uint64_t seed, const std::string& sinr_model, int threads) {
        mbeam::SimulationConfig c;
        c.frame = frame_spec(kind, n_t, n_beams, {}, {});
        c.users = users;
        c.m = fading;
        c.snr_db = snr_db;
        c.slots = slots;
        c.seed = seed;
        c.sinr_model = mbeam::parse_sinr_model(sinr_model);
        mbeam::ThroughputReport r;
        {
          py::gil_scoped_release release;
          r = mbeam::monte_carlo(c, mbeam::RunOptions{threads});
        }
        py::dict d;
        d["slots"] = r.slots;
        d["mean"] = r.mean;
        d["stderr"] = r.std_error;
        d["ci_lo"] = r.ci_low;
        d["ci_hi"] = r.ci_high;
        d["occupancy"] = r.mean_occupancy;
        d["per_beam_counts"] = r.per_beam_counts;
        return d;
      },
      py::arg("kind"), py::arg("n_t"), py::arg("n_beams") = 0, py::arg("users") = 64, py::arg("m") = 0.5,
      py::arg("snr_db") = 0.0, py::arg("slots") = 20000, py::arg("seed") = 42, py::arg("sinr_model") = "exact",
      py::arg("threads") = 0);

  // harness: JSON crosses the boundary as text
  m.def(
      "_run_experiment",
      [](const std::string& spec_text, int threads) {
        const auto spec = mbeam::parse_experiment_spec(nlohmann::json::parse(spec_text));
        mbeam::Table table;
        {
          py::gil_scoped_release release;
          table = mbeam::run_experiment(spec, mbeam::RunOptions{threads});
        }
        return mbeam::table_to_json(table, mbeam::resolved_spec_json(spec)).dump();
      },
      py::arg("spec"), py::arg("threads") = 0);
  m.def(
      "_run_criterion",
      [](int number, std::uint64_t seed, std::int64_t slots) {
        mbeam::VerifyOptions o;
        o.seed = seed;
        o.slots = slots;
        std::vector<mbeam::CriterionResult> r;
        {
          py::gil_scoped_release release;
          r.push_back(number == 0 ? mbeam::run_invariant_suite(o) : mbeam::run_criterion(number, o));
        }
        return mbeam::verdict_json(r).dump();
      },
      py::arg("number"), py::arg("seed") = 42, py::arg("slots") = 20000);
}
