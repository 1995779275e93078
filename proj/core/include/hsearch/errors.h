// Copyright 2026 The hsearch Authors. All rights reserved.
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

#ifndef HSEARCH_ERRORS_H_
#define HSEARCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hsearch {

// A postcondition the library itself is responsible for did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed text input. `line` is 1-based; 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A file could not be opened, read, or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsearch

#endif  // HSEARCH_ERRORS_H_
