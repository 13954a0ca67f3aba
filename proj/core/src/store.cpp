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

#include "qacc/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace qacc {

std::filesystem::path resolve_store_path(const std::optional<std::string>& explicit_path) {
    if (explicit_path && !explicit_path->empty()) {
        return *explicit_path;
    }
    if (const char* env = std::getenv(kStoreEnvVar); env != nullptr && *env != '\0') {
        return env;
    }
    return kDefaultStorePath;
}

bool RunFilter::matches(const RunRecord& record) const {
    if (run_id && record.run_id != *run_id) return false;
    if (circuit_hash && record.circuit_hash != *circuit_hash) return false;
    if (since && record.timestamp < *since) return false;
    if (until && record.timestamp > *until) return false;
    return true;
}

RunStore::RunStore(std::filesystem::path path) : path_(std::move(path)) {}

namespace {

std::runtime_error io_error(const std::filesystem::path& path, const char* action) {
    return std::runtime_error(std::string("run store ") + path.string() + ": " + action +
                              " failed: " + std::strerror(errno));
}

// Holds an exclusive advisory lock for the lifetime of the object.
class FileLock {
public:
    explicit FileLock(int fd) : fd_(fd) {
        while (::flock(fd_, LOCK_EX) != 0) {
            if (errno != EINTR) {
                throw std::runtime_error(std::string("flock failed: ") + std::strerror(errno));
            }
        }
    }
    ~FileLock() { ::flock(fd_, LOCK_UN); }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_;
};

class Fd {
public:
    explicit Fd(int fd) : fd_(fd) {}
    ~Fd() {
        if (fd_ >= 0) ::close(fd_);
    }
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    int get() const { return fd_; }

private:
    int fd_;
};

}  // namespace

void RunStore::append(const RunRecord& record) {
    const std::string line = serialize(record) + "\n";
    std::lock_guard<std::mutex> guard(mutex_);
    if (path_.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
    }
    Fd fd(::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644));
    if (fd.get() < 0) {
        throw io_error(path_, "open");
    }
    FileLock lock(fd.get());
    std::size_t written = 0;
    while (written < line.size()) {
        const ssize_t n = ::write(fd.get(), line.data() + written, line.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw io_error(path_, "write");
        }
        written += static_cast<std::size_t>(n);
    }
}

QueryResult RunStore::query(const RunFilter& filter) const {
    std::lock_guard<std::mutex> guard(mutex_);
    QueryResult result;
    if (!std::filesystem::exists(path_)) {
        return result;
    }
    std::ifstream in(path_);
    if (!in) {
        throw io_error(path_, "open");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        try {
            RunRecord record = deserialize(line);
            if (filter.matches(record)) {
                result.records.push_back(std::move(record));
            }
        } catch (const std::invalid_argument&) {
            ++result.skipped_lines;
        }
    }
    if (in.bad()) {
        throw io_error(path_, "read");
    }
    return result;
}

}  // namespace qacc
