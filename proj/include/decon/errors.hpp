// Copyright 2026 The decon Authors
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

#ifndef DECON_ERRORS_HPP_
#define DECON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace decon {

// A family or algorithm parameter is outside its valid domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input graph does not have the required structure (disconnected,
// not a tree, ...).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition, e.g. an agent was asked to
// move along a non-edge.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A strategy was requested for a topology it does not handle.
class ApplicabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed its configured resource bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace decon

#endif  // DECON_ERRORS_HPP_
