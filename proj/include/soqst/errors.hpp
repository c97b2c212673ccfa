// Copyright 2026 The soqst Authors
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

namespace soqst {

/// The transfer matrix is too close to singular to invert.
class SingularTransfer : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-unitary channel was used where a unitary was required.
class ModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Hamiltonian cannot be realized by the requested pulse sequence.
class UnsupportedModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace soqst
