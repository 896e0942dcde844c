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
#include "plotkit/error.h"

namespace plotkit {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kDecode: return "decode-error";
    case ErrorCode::kOutOfBounds: return "out-of-bounds";
    case ErrorCode::kOverlappingAnnotations: return "overlapping-annotations";
    case ErrorCode::kLayoutNotFound: return "layout-not-found";
    case ErrorCode::kInsufficientTicks: return "insufficient-ticks";
    case ErrorCode::kNonMonotonicScale: return "non-monotonic-scale";
    case ErrorCode::kNoDataObjects: return "no-data-objects";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kZeroGroundTruth: return "zero-ground-truth";
    case ErrorCode::kMissingFile: return "missing-file";
    case ErrorCode::kSchemaMismatch: return "schema-mismatch";
    case ErrorCode::kSpecValidation: return "spec-validation";
  }
  return "unknown";
}

}  // namespace plotkit
