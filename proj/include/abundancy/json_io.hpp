// Copyright 2026 The Abundancy Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "json.hpp"

#include "abundancy/certificate.hpp"
#include "abundancy/rational.hpp"

namespace abundancy {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "v1";

/// {"verdict":"outlaw","theorem":"T2","q":"29/12","x":1,"params":{...}}.
/// Arbitrary-size integers are decimal strings; j, case and x_src are numbers.
Json certificate_to_json(const PositiveRational& q, std::uint32_t x, const Certificate& cert);

/// Inverse of certificate_to_json; throws std::invalid_argument on a
/// malformed record.
Certificate certificate_from_json(const Json& record);

Json classification_to_json(const Classification& c);
Classification classification_from_json(const Json& record);

/// {"schema":"v1","command":...,"inputs":{...},"result":{...},"elapsed_ms":...}.
Json output_record(std::string_view command, Json inputs, Json result, std::chrono::nanoseconds elapsed);

}  // namespace abundancy
