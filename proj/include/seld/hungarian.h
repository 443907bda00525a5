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

#ifndef SELD_HUNGARIAN_H_
#define SELD_HUNGARIAN_H_

#include <vector>

#include <Eigen/Core>

namespace seld {

// Minimum-cost assignment on a rectangular cost matrix. Returns, for every
// row, the assigned column or -1; exactly min(rows, cols) rows are assigned.
std::vector<int> SolveAssignment(const Eigen::MatrixXd& cost);

}  // namespace seld

#endif  // SELD_HUNGARIAN_H_
