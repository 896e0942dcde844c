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
#ifndef PLOTKIT_PARALLEL_H_
#define PLOTKIT_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>

namespace plotkit {

// Logical CPUs as seen by OpenMP (1 when built without it).
int DefaultWorkers();

// Runs body(i) for i in [0, n) on up to `workers` OpenMP threads with dynamic
// scheduling. The first exception thrown by any iteration is rethrown after
// the loop; remaining iterations still run.
void ParallelFor(size_t n, int workers, const std::function<void(size_t)>& body);

}  // namespace plotkit

#endif  // PLOTKIT_PARALLEL_H_
