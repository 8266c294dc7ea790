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

#include <cstdio>
#include <set>

#include "mbeam/channel/monte_carlo.hpp"
#include "mbeam/error.hpp"

namespace mbeam {
namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

void to_json(nlohmann::json& j, const SimulationConfig& c) {
  j = nlohmann::json{{"construction", c.frame.kind},
                     {"n_t", c.frame.n_t},
                     {"n_beams", c.frame.n_beams},
                     {"users", c.users},
                     {"m", c.m},
                     {"snr_db", c.snr_db},
                     {"slots", c.slots},
                     {"seed", c.seed},
                     {"sinr_model", to_string(c.sinr_model)}};
  if (!c.frame.rows.empty()) j["rows"] = c.frame.rows;
  if (!c.frame.difference_set.empty()) j["difference_set"] = c.frame.difference_set;
}

void from_json(const nlohmann::json& j, SimulationConfig& c) {
  static const std::set<std::string> known{"construction", "n_t",   "n_beams", "rows", "difference_set",
                                           "users",        "m",     "snr_db",  "slots", "seed",
                                           "sinr_model"};
  require(j.is_object(), "simulation config must be a JSON object");
  for (const auto& item : j.items())
    require(known.count(item.key()) != 0, "simulation config: unknown field '" + item.key() + "'");
  try {
    SimulationConfig d;
    c.frame.kind = j.value("construction", d.frame.kind);
    c.frame.n_t = j.value("n_t", d.frame.n_t);
    c.frame.n_beams = j.value("n_beams", 0);
    c.frame.rows = j.value("rows", std::vector<int>{});
    c.frame.difference_set = j.value("difference_set", std::vector<int>{});
    c.users = j.value("users", d.users);
    c.m = j.value("m", d.m);
    c.snr_db = j.value("snr_db", d.snr_db);
    c.slots = j.value("slots", d.slots);
    c.seed = j.value("seed", d.seed);
    c.sinr_model = parse_sinr_model(j.value("sinr_model", to_string(d.sinr_model)));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("simulation config: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const ThroughputReport& r) {
  j = nlohmann::json{{"slots", r.slots},
                     {"mean", r.mean},
                     {"stderr", r.std_error},
                     {"ci_lo", r.ci_low},
                     {"ci_hi", r.ci_high},
                     {"occupancy", r.mean_occupancy},
                     {"per_beam_counts", r.per_beam_counts}};
}

std::string report_csv_header() {
  return "construction,n_t,n,K,m,snr_db,slots,seed,mean,stderr,ci_lo,ci_hi,occupancy";
}

std::string report_csv_row(const SimulationConfig& config, const ThroughputReport& r) {
  const SimulationConfig c = validated(config);
  std::string row = c.frame.kind;
  row += ',' + std::to_string(c.frame.n_t);
  row += ',' + std::to_string(c.frame.n_beams);
  row += ',' + std::to_string(c.users);
  row += ',' + fixed(c.m, 6);
  row += ',' + fixed(c.snr_db, 6);
  row += ',' + std::to_string(c.slots);
  row += ',' + std::to_string(c.seed);
  for (double v : {r.mean, r.std_error, r.ci_low, r.ci_high, r.mean_occupancy}) row += ',' + fixed(v, 6);
  return row;
}

}  // namespace mbeam
