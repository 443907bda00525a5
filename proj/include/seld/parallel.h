/* Copyright 2026 The seldkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SELD_PARALLEL_H_
#define SELD_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace seld {

// Runs fn(0..n-1) on up to `jobs` threads. Work items must write only to their
// own outputs. The first exception thrown by any item is rethrown after all
// workers have stopped.
void ParallelFor(size_t n, int jobs, const std::function<void(size_t)>& fn);

// Worker count used when --jobs is not given.
int DefaultJobs();

}  // namespace seld

#endif  // SELD_PARALLEL_H_
