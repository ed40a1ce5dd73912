// Copyright 2026 The Super Scrambler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERSCRAMBLER_RUN_MANIFEST_HPP
#define SUPERSCRAMBLER_RUN_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace superscrambler {

inline constexpr std::string_view kToolVersion = "0.1.0";

std::string sha256_hex(std::string_view bytes);
/// Throws std::ios_base::failure if the file cannot be read.
std::string sha256_file(const std::filesystem::path &path);

/// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

struct ArtifactDigest {
  std::filesystem::path path;
  std::string sha256;
};

/// Record of one CLI invocation. `arguments` is the fully resolved argument
/// list after the subcommand name (defaults included), so
/// `<tool> <subcommand> <arguments...>` reproduces the run.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> arguments;
  nlohmann::json config = nlohmann::json::object();
  std::string tool_version{kToolVersion};
  std::optional<std::uint64_t> seed;
  std::string started_at;
  std::string finished_at;
  std::vector<ArtifactDigest> outputs;

  /// Hashes the file as it is now.
  void add_output(const std::filesystem::path &path);

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json &j);
  static RunManifest load(const std::filesystem::path &path);
  void save(const std::filesystem::path &path) const;
};

} // namespace superscrambler

#endif // SUPERSCRAMBLER_RUN_MANIFEST_HPP
