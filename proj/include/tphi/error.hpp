// Copyright 2026 The Authors.
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

#ifndef TPHI_ERROR_HPP_
#define TPHI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tphi {

enum class ErrorKind {
  kEmptySum,
  kLengthMismatch,
  kZeroVector,
  kOddDiscretization,
  kIndexOutOfRange,
  kBadArity,
  kIdenticallyZero,
  kCycleDetected,
  kUnknownElement,
  kSizeCapExceeded,
  kDimOutOfRange,
  kEmptyPerp,
  kInvalidArgument,
  kParse,
  kOverflow,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind lets callers (the CLI in particular) tell input errors apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Selects between the serial reference path and the OpenMP path of the
// enumeration kernels. Both produce identical, sorted output.
enum class Exec { kSerial, kParallel };

inline constexpr std::size_t kDefaultCap = 5'000'000;

}  // namespace tphi

#endif  // TPHI_ERROR_HPP_
