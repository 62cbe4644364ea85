// Copyright 2026 The wtab Authors
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

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wtab/error.hpp"

#ifndef WTAB_VERSION
#define WTAB_VERSION "dev"
#endif

namespace wtab {

/// Identity of a cached result.  The code version is part of the key so a
/// new build never reads results computed by an older one.
struct CacheKey {
  std::string kind;  // e.g. "classify"
  char gtype = 'C';
  std::string partition;
  std::string bound;
  std::string variant;  // method, parity selection, ...
  std::string version = WTAB_VERSION;

  std::string canonical() const {
    return kind + "|" + gtype + "|" + partition + "|" + bound + "|" + variant + "|" + version;
  }
};

/// 64-bit FNV-1a; stable across platforms and runs, unlike std::hash.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string content_address(const CacheKey& key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key.canonical())));
  return buf;
}

/// JSON documents stored as <dir>/<address>.json.  Each file records its
/// full key, which is compared on load so hash collisions read as misses.
/// Writes go through a temporary file and a rename, so concurrent writers of
/// the same entry are harmless.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const CacheKey& key) const { return dir_ / (content_address(key) + ".json"); }

  std::optional<nlohmann::json> load(const CacheKey& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || doc.value("key", std::string()) != key.canonical()) {
      return std::nullopt;
    }
    return doc.at("payload");
  }

  void store(const CacheKey& key, const nlohmann::json& payload) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error(ErrorCode::kInvalidArgument, "cannot create cache directory " + dir_.string());
    const auto target = path_for(key);
    std::ostringstream tag;
    tag << target.filename().string() << ".tmp." << std::hash<std::string>{}(key.canonical()) << "."
        << reinterpret_cast<std::uintptr_t>(&payload);
    const auto tmp = dir_ / tag.str();
    {
      std::ofstream out(tmp);
      if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + tmp.string());
      out << nlohmann::json{{"key", key.canonical()}, {"payload", payload}}.dump() << "\n";
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::kInvalidArgument, "cannot publish cache entry " + target.string());
    }
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace wtab
