// Copyright 2026 The sfcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sfcodes {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A named precondition of a constructor or family builder was violated.
/// `precondition()` is a short stable identifier ("divisibility",
/// "coset-overlap", ...) suitable for machine matching; what() carries the
/// full message including the offending values.
class PreconditionError : public Error {
public:
    PreconditionError(std::string precondition, const std::string& message)
        : Error(precondition + ": " + message), precondition_(std::move(precondition)) {}

    const std::string& precondition() const { return precondition_; }

private:
    std::string precondition_;
};

/// Arithmetic between elements of different field contexts.
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& message) : Error(message) {}
};

/// An internal consistency check failed (a mathematical invariant that the
/// implementation guarantees). Seeing this is a bug, not a usage error.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error(message) {}
};

}  // namespace sfcodes
