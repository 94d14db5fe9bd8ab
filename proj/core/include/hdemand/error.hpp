// Copyright 2026 The hdemand Authors
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

namespace hdemand {

// Base for every error raised by the library. Callers that only care about
// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Share estimates are undefined because the window has no regional census.
class DegenerateHistory : public Error {
 public:
  using Error::Error;
};

class InsufficientHistory : public Error {
 public:
  using Error::Error;
};

class InvalidForecast : public Error {
 public:
  using Error::Error;
};

// The analytic inverse of the moment system has no stationary solution.
class InfeasibleMoments : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input file could not be read or tokenized.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::string field, const std::string& what)
      : Error(what), row_(row), field_(std::move(field)) {}

  std::size_t row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t row_;
  std::string field_;
};

// Input parsed but breaks a domain invariant (A+B > N, F <= 0, day gap).
class ValidationError : public Error {
 public:
  ValidationError(std::size_t row, std::string field, const std::string& what)
      : Error(what), row_(row), field_(std::move(field)) {}

  std::size_t row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t row_;
  std::string field_;
};

// Too many bootstrap replicates had to be redrawn.
class BootstrapFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hdemand
