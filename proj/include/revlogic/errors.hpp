// Copyright 2026 The revlogic Authors.
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

namespace revlogic {

/// Caller violated an API precondition (bad arity, empty line list, ...).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structural problem with a gate application on a circuit.
class validation_error : public std::invalid_argument {
 public:
  enum class Kind { DuplicateIndex, OutOfRange, ArityMismatch, DuplicateName, Other };

  validation_error(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Exhaustive enumeration refused because the input space is too large.
class enumeration_cap_error : public std::runtime_error {
 public:
  enumeration_cap_error(std::size_t free_bits, std::size_t cap)
      : std::runtime_error("exhaustive enumeration over " + std::to_string(free_bits) +
                           " free bits exceeds the cap of " + std::to_string(cap)),
        free_bits_(free_bits),
        cap_(cap) {}

  [[nodiscard]] std::size_t free_bits() const noexcept { return free_bits_; }
  [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t free_bits_;
  std::size_t cap_;
};

}  // namespace revlogic
