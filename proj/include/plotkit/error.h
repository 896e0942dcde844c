// Copyright 2026 The PlotKit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef PLOTKIT_ERROR_H_
#define PLOTKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace plotkit {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kDecode,
  kOutOfBounds,
  kOverlappingAnnotations,
  kLayoutNotFound,
  kInsufficientTicks,
  kNonMonotonicScale,
  kNoDataObjects,
  kLengthMismatch,
  kZeroGroundTruth,
  kMissingFile,
  kSchemaMismatch,
  kSpecValidation,
};

const char* ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported as plotkit::Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace plotkit

#endif  // PLOTKIT_ERROR_H_
