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
#ifndef PLOTKIT_DETECTION_H_
#define PLOTKIT_DETECTION_H_

#include "plotkit/annotation.h"
#include "plotkit/geometry.h"

namespace plotkit {

struct Detection {
  Box box;
  ObjectClass cls = ObjectClass::kBar;
  double score = 0.0;  // in [0, 1]

  friend bool operator==(const Detection&, const Detection&) = default;
};

}  // namespace plotkit

#endif  // PLOTKIT_DETECTION_H_
