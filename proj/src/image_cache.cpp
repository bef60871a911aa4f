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

#include "abundancy/image_cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abundancy {
namespace {

constexpr std::string_view kHeader = "#abundancy-image v1";
constexpr std::string_view kBoundTag = "#bound ";

struct Loaded {
  oracle::ImageTable table;
  bool clean = true;  // false when the tail after the last checkpoint was dropped
};

Loaded read_file(const std::filesystem::path& path, std::uint32_t x) {
  Loaded out;
  out.table.x = x;
  std::ifstream in(path);
  if (!in) return out;

  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    out.clean = false;
    return out;
  }
  std::vector<std::pair<PositiveRational, Natural>> pending;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind(kBoundTag, 0) == 0) {
      std::uint64_t b = 0;
      try {
        b = std::stoull(line.substr(kBoundTag.size()));
      } catch (const std::logic_error&) {
        out.clean = false;
        break;
      }
      for (auto& [q, w] : pending) out.table.entries.emplace(std::move(q), std::move(w));
      pending.clear();
      out.table.bound = b;
      continue;
    }
    std::istringstream fields(line);
    std::string xs, qs, ws;
    if (!std::getline(fields, xs, '\t') || !std::getline(fields, qs, '\t') || !std::getline(fields, ws) ||
        xs != std::to_string(x)) {
      out.clean = false;
      break;
    }
    try {
      pending.emplace_back(PositiveRational::parse(qs), Natural::parse(ws));
    } catch (const std::logic_error&) {
      out.clean = false;
      break;
    }
  }
  if (!pending.empty()) out.clean = false;
  return out;
}

void write_records(std::ostream& out, std::uint32_t x, std::vector<std::pair<Natural, PositiveRational>> rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [w, q] : rows) out << x << '\t' << q.to_string() << '\t' << w.to_string() << '\n';
}

void rewrite(const std::filesystem::path& path, const oracle::ImageTable& table) {
  std::vector<std::pair<Natural, PositiveRational>> rows;
  rows.reserve(table.entries.size());
  for (const auto& [q, w] : table.entries) rows.emplace_back(w, q);
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write image cache " + tmp.string());
    out << kHeader << '\n';
    write_records(out, table.x, std::move(rows));
    out << kBoundTag << table.bound << '\n';
  }
  std::filesystem::rename(tmp, path);
}

oracle::ImageTable restrict_to(const oracle::ImageTable& table, std::uint64_t bound) {
  oracle::ImageTable out;
  out.x = table.x;
  out.bound = bound;
  const Natural limit(bound);
  for (const auto& [q, w] : table.entries) {
    if (w <= limit) out.entries.emplace(q, w);
  }
  return out;
}

}  // namespace

ImageCache::ImageCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path ImageCache::default_directory() {
  if (const char* dir = std::getenv("ABUNDANCY_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "abundancy";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "abundancy";
  }
  return std::filesystem::temp_directory_path() / "abundancy-cache";
}

std::filesystem::path ImageCache::file_for(std::uint32_t x) const {
  return directory_ / ("image-x" + std::to_string(x) + ".tsv");
}

std::uint64_t ImageCache::cached_bound(std::uint32_t x) const { return read_file(file_for(x), x).table.bound; }

oracle::ImageTable ImageCache::load_or_build(std::uint32_t x, std::uint64_t bound, unsigned threads) {
  if (x == 0) throw std::domain_error("exponent x must be at least 1");
  const auto path = file_for(x);
  Loaded loaded = read_file(path, x);
  oracle::ImageTable& table = loaded.table;

  if (table.bound >= bound) {
    if (!loaded.clean) rewrite(path, table);
    return restrict_to(table, bound);
  }

  std::filesystem::create_directories(directory_);
  const auto added = oracle::image_extend(x, table.bound + 1, bound, table, threads);
  for (const auto& [q, w] : added) table.entries.emplace(q, w);
  const bool fresh = table.bound == 0;
  table.bound = bound;

  if (fresh || !loaded.clean) {
    rewrite(path, table);
  } else {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to image cache " + path.string());
    std::vector<std::pair<Natural, PositiveRational>> rows;
    rows.reserve(added.size());
    for (const auto& [q, w] : added) rows.emplace_back(w, q);
    write_records(out, x, std::move(rows));
    out << kBoundTag << bound << '\n';
  }
  return table;
}

}  // namespace abundancy
