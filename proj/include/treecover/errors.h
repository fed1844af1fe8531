// Copyright 2026 The treecover Authors
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

#ifndef TREECOVER_ERRORS_H_
#define TREECOVER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace treecover {

// Malformed tree input or an invalid node reference. `line()` is the 1-based
// input line when the error comes from the parser, 0 otherwise.
class TreeError : public std::invalid_argument {
 public:
  explicit TreeError(const std::string& what, int line = 0)
      : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what
                                       : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The autonomy is too small for the tree (p < 2h) or k < 1.
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle was asked to run above its configured size cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace treecover

#endif  // TREECOVER_ERRORS_H_
