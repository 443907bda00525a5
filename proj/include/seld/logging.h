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

#ifndef SELD_LOGGING_H_
#define SELD_LOGGING_H_

#include <chrono>
#include <string>

#include <spdlog/spdlog.h>

namespace seld {

// Process-wide stderr logger. Lines look like
//   2026-10-16T12:00:00.000 warn stage=accdoa msg="..." collisions=2
spdlog::logger& Log();

// Logs `stage=<name> wall_ms=<elapsed>` plus any counters when destroyed.
class StageTimer {
 public:
  explicit StageTimer(std::string stage);
  ~StageTimer();
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

  void AddCounter(const std::string& key, long long value);

 private:
  std::string stage_;
  std::string counters_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace seld

#endif  // SELD_LOGGING_H_
