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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "abundancy/oracle.hpp"

namespace abundancy {

struct SelfcheckOptions {
  /// Scales every property; the audit scans 1..bound.
  std::uint64_t bound = 100'000;
  std::uint32_t x_max = 3;
  /// Adds a T1 certificate for 4/3 (an index) to the audited corpus.
  bool inject_forged = false;
  unsigned threads = 0;
  std::uint64_t seed = 42;
  /// Image cache location; nullopt skips the cache.
  std::optional<std::filesystem::path> cache_dir;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::uint64_t samples = 0;
  std::string counterexample;  // first failure, empty when passed
  std::chrono::nanoseconds elapsed{0};
};

struct SelfcheckReport {
  std::vector<PropertyResult> properties;
  std::vector<oracle::Violation> violations;

  bool ok() const;
};

SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

}  // namespace abundancy
