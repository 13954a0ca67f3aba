// Copyright 2026 The qacc Authors
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

#include <cstddef>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qacc/run.hpp"

namespace qacc {

/// Environment variable that overrides the default store location.
inline constexpr const char* kStoreEnvVar = "QACC_STORE";
inline constexpr const char* kDefaultStorePath = "qacc_runs.jsonl";

/// Store path: `explicit_path` if set, else $QACC_STORE, else the default.
std::filesystem::path resolve_store_path(const std::optional<std::string>& explicit_path = {});

struct RunFilter {
    std::optional<std::string> run_id;
    std::optional<std::string> circuit_hash;
    /// Inclusive bounds compared against the ISO-8601 timestamp text.
    std::optional<std::string> since;
    std::optional<std::string> until;

    bool matches(const RunRecord& record) const;
};

struct QueryResult {
    std::vector<RunRecord> records;
    /// Lines that could not be decoded and were skipped.
    std::size_t skipped_lines = 0;
};

/// Append-only JSON-lines file of run records.
class RunStore {
public:
    explicit RunStore(std::filesystem::path path);

    const std::filesystem::path& path() const noexcept { return path_; }

    /// Appends one line. Concurrent appenders (threads or processes) are
    /// serialized. Throws std::runtime_error naming the path on I/O failure.
    void append(const RunRecord& record);

    /// Missing file reads as an empty store.
    QueryResult query(const RunFilter& filter = {}) const;

private:
    std::filesystem::path path_;
    mutable std::mutex mutex_;
};

}  // namespace qacc
