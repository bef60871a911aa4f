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

#include <cstdint>
#include <filesystem>

#include "abundancy/oracle.hpp"

namespace abundancy {

/// Append-only on-disk store of image tables, one file per exponent:
///
///   #abundancy-image v1
///   1<TAB>3/2<TAB>2
///   ...
///   #bound 1000
///
/// Records are sorted by witness. A "#bound N" line marks that every value
/// with smallest witness <= N precedes it; anything after the last such line
/// is an interrupted extension and is discarded on load.
class ImageCache {
 public:
  explicit ImageCache(std::filesystem::path directory);

  /// $ABUNDANCY_CACHE_DIR, else $XDG_CACHE_HOME/abundancy, else
  /// ~/.cache/abundancy, else a directory under the system temp path.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path file_for(std::uint32_t x) const;

  /// Image of I(x, .) over 1..bound, served from the file when it covers
  /// bound and extended (then persisted) when it does not.
  oracle::ImageTable load_or_build(std::uint32_t x, std::uint64_t bound, unsigned threads = 0);

  /// Largest bound the file for x covers; 0 when absent or unreadable.
  std::uint64_t cached_bound(std::uint32_t x) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace abundancy
