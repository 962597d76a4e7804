// Copyright 2026 The statent Authors
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

#include <stdexcept>
#include <string>

namespace statent {

/// Raised when an input violates a documented precondition or invariant.
class InvalidInput : public std::invalid_argument {
  public:
    explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when the linear-programming routine fails to converge.
class SolverFailure : public std::runtime_error {
  public:
    explicit SolverFailure(const std::string &what) : std::runtime_error(what) {}
};

} // namespace statent
