// Copyright 2026 The qbe developers
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

namespace qbe {

struct NonPowerOfTwoSize : std::invalid_argument {
  explicit NonPowerOfTwoSize(const std::string& msg)
      : std::invalid_argument(msg) {}
};

struct RobinDegenerate : std::invalid_argument {
  explicit RobinDegenerate(const std::string& msg)
      : std::invalid_argument(msg) {}
};

struct RobinOutOfRange : std::domain_error {
  explicit RobinOutOfRange(const std::string& msg) : std::domain_error(msg) {}
};

struct LengthMismatch : std::invalid_argument {
  explicit LengthMismatch(const std::string& msg)
      : std::invalid_argument(msg) {}
};

struct SizeCapExceeded : std::length_error {
  explicit SizeCapExceeded(const std::string& msg) : std::length_error(msg) {}
};

struct UnsupportedVariant : std::invalid_argument {
  explicit UnsupportedVariant(const std::string& msg)
      : std::invalid_argument(msg) {}
};

struct UnsupportedDiagonal : std::invalid_argument {
  explicit UnsupportedDiagonal(const std::string& msg)
      : std::invalid_argument(msg) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& msg)
      : std::invalid_argument(msg) {}
};

struct CircuitError : std::logic_error {
  explicit CircuitError(const std::string& msg) : std::logic_error(msg) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace qbe
