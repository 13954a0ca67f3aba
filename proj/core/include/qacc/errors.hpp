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
#include <stdexcept>
#include <string>

namespace qacc {

/// Base class for all toolchain errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested state or matrix does not fit the supported size.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed cQASM input. `line()` is 1-based; 0 means "whole file".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line),
          detail_(what) {}

    std::size_t line() const noexcept { return line_; }
    /// Message without the line prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// Placement or routing failed for the requested topology.
class MappingError : public Error {
public:
    using Error::Error;
};

}  // namespace qacc
