// Copyright 2026 The cnotca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cnotca {

/// A computed quantity broke a physical contract (imaginary expectation of a
/// Hermitian string, non-Hermitian density matrix, negative eigenvalue).
/// These indicate a bug, never bad user input.
class NumericContractError : public std::runtime_error {
   public:
    explicit NumericContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cnotca
