// Copyright 2026 The lowdeg Authors
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

#ifndef LOWDEG_ERROR_HPP_
#define LOWDEG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lowdeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An angle was requested with a zero-length arm.
class DegenerateAngle : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a configured enumeration cap.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::size_t cap)
      : Error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// No spanning tree satisfies the requested constraint.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Text input that fails to parse. Carries the 1-based line number.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InvalidInput("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lowdeg

#endif  // LOWDEG_ERROR_HPP_
