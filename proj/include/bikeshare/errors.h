// Copyright 2026 The bikeshare Authors
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

#ifndef BIKESHARE_ERRORS_H_
#define BIKESHARE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bikeshare {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad dimensions, labels out of range, invalid instances.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Text that could not be parsed into a rational or a file schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An algorithm was called outside the input region it is defined on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Abandonment limits of two or more bikes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A constructed schedule failed its own certification. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bikeshare

#endif  // BIKESHARE_ERRORS_H_
