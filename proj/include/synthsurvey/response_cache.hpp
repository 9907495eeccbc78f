// Copyright 2026 The synthsurvey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNTHSURVEY_RESPONSE_CACHE_HPP
#define SYNTHSURVEY_RESPONSE_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace synthsurvey {

struct ChatRequest {
  std::string model_id;
  double temperature = 0.0;
  std::string system_text;
  std::string user_text;
  std::uint64_t permutation_seed = 0;

  /// SHA-256 hex digest of the canonical JSON encoding of all five fields.
  std::string cache_key() const;
};

/// Append-only reply store. With a backing file every new entry is written
/// as one JSON object per line; existing entries are never replaced.
class ResponseCache {
 public:
  struct Entry {
    std::string key;
    ChatRequest request;
    std::string reply;
    std::string timestamp;
  };

  /// Memory-only cache.
  ResponseCache() = default;
  /// Loads `path` if it exists and appends new entries to it. A truncated
  /// final line (interrupted write) is skipped; other bad lines throw.
  explicit ResponseCache(std::filesystem::path path);

  ResponseCache(const ResponseCache&) = delete;
  ResponseCache& operator=(const ResponseCache&) = delete;

  std::optional<Entry> find(const std::string& key) const;

  /// Stores `entry` unless its key is present; returns the stored entry.
  Entry insert(Entry entry);

  std::size_t size() const;
  const std::optional<std::filesystem::path>& path() const { return path_; }

  static std::string encode_line(const Entry& entry);
  static Entry decode_line(const std::string& line);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Entry> entries_;
  std::optional<std::filesystem::path> path_;
  std::ofstream out_;
};

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_RESPONSE_CACHE_HPP
