// Copyright 2026 The fcache Authors.
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

#include "config_json.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace fcache {

void to_json(nlohmann::json& j, const NetworkConfig& c) {
  j = nlohmann::json{{"n", c.n},         {"k", c.k},         {"M", c.M},
                     {"q", c.q},         {"alpha", c.alpha}, {"gamma", c.gamma},
                     {"seed", c.seed},   {"trials", c.trials}, {"cap_headroom", c.cap_headroom},
                     {"tol", c.tol}};
}

void from_json(const nlohmann::json& j, NetworkConfig& c) {
  static const std::set<std::string> known = {"n", "k", "M", "q", "alpha", "gamma",
                                              "seed", "trials", "cap_headroom", "tol", "sweep"};
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
  }
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("n", c.n);
  get("k", c.k);
  get("M", c.M);
  get("q", c.q);
  get("alpha", c.alpha);
  get("gamma", c.gamma);
  get("seed", c.seed);
  get("trials", c.trials);
  get("cap_headroom", c.cap_headroom);
  get("tol", c.tol);
}

void to_json(nlohmann::json& j, const PlacementVector& x) { j = x.counts(); }

void from_json(const nlohmann::json& j, PlacementVector& x) { x = PlacementVector(j.get<std::vector<int>>()); }

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return nlohmann::json::parse(in);
}

}  // namespace fcache
