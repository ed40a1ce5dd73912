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

#include "superscrambler/run_manifest.hpp"

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ios>
#include <stdexcept>

#include <openssl/evp.h>

namespace superscrambler {

namespace {

class DigestContext {
public:
  DigestContext() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("SHA-256 initialisation failed");
    }
  }
  ~DigestContext() { EVP_MD_CTX_free(ctx_); }
  DigestContext(const DigestContext &) = delete;
  DigestContext &operator=(const DigestContext &) = delete;

  void update(const char *data, std::size_t n) { EVP_DigestUpdate(ctx_, data, n); }

  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_, md.data(), &len);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; ++k) {
      out += kHex[md[k] >> 4];
      out += kHex[md[k] & 15];
    }
    return out;
  }

private:
  EVP_MD_CTX *ctx_;
};

} // namespace

std::string sha256_hex(std::string_view bytes) {
  DigestContext ctx;
  ctx.update(bytes.data(), bytes.size());
  return ctx.hex();
}

std::string sha256_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::ios_base::failure("cannot read " + path.string());
  }
  DigestContext ctx;
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    ctx.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return ctx.hex();
}

std::string utc_timestamp() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void RunManifest::add_output(const std::filesystem::path &path) {
  outputs.push_back({path, sha256_file(path)});
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["arguments"] = arguments;
  j["config"] = config;
  j["tool_version"] = tool_version;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  j["outputs"] = nlohmann::json::array();
  for (const auto &o : outputs) {
    j["outputs"].push_back({{"path", o.path.string()}, {"sha256", o.sha256}});
  }
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json &j) {
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  m.arguments = j.at("arguments").get<std::vector<std::string>>();
  m.config = j.value("config", nlohmann::json::object());
  m.tool_version = j.value("tool_version", std::string(kToolVersion));
  if (j.contains("seed") && !j["seed"].is_null()) {
    m.seed = j["seed"].get<std::uint64_t>();
  }
  m.started_at = j.value("started_at", "");
  m.finished_at = j.value("finished_at", "");
  for (const auto &o : j.value("outputs", nlohmann::json::array())) {
    m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>()});
  }
  return m;
}

RunManifest RunManifest::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot read manifest " + path.string());
  }
  return from_json(nlohmann::json::parse(in));
}

void RunManifest::save(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::ios_base::failure("cannot write manifest " + path.string());
  }
  out << to_json().dump(2) << '\n';
  if (!out) {
    throw std::ios_base::failure("failed writing manifest " + path.string());
  }
}

} // namespace superscrambler
