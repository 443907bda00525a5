/* Copyright 2026 The seldkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SELD_ERRORS_H_
#define SELD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace seld {

// Base class for every error raised by the toolkit. The CLI maps any Error to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unsupported container (WAV, binary dumps).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `row` is 1-based; 0 when not row-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int row);
  int row() const { return row_; }

 private:
  int row_;
};

// A value lies outside its permitted range (class id, angle, index).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Structural contract violation: duplicates, shape mismatch, missing entries.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Mathematical domain violation (e.g. direction of a zero vector).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid processing configuration (non-COLA STFT, ill-conditioned array).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Random sampling could not satisfy its constraints.
class SamplingError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace seld

#endif  // SELD_ERRORS_H_
