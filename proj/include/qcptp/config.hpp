// Copyright 2026 The qcptp Authors
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

// config.hpp: JSON system description.

#pragma once

#include <optional>
#include <string>

#include "qcptp/core_model.hpp"

namespace qcptp {

struct InitialMoments {
    RVec mean;
    RMat cov;
};

struct Config {
    SystemSpec spec;
    std::optional<InitialMoments> initial;
    std::string canonical;  // compact re-serialization of the parsed config
};

// Raises InvalidInput with a line or field diagnostic.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

} // namespace qcptp
