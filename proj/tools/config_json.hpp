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

#pragma once

#include <string>

#include <json.hpp>

#include "fcache/network_config.hpp"

namespace fcache {

void to_json(nlohmann::json& j, const NetworkConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
void from_json(const nlohmann::json& j, NetworkConfig& c);

void to_json(nlohmann::json& j, const PlacementVector& x);
void from_json(const nlohmann::json& j, PlacementVector& x);

nlohmann::json read_json_file(const std::string& path);

}  // namespace fcache
