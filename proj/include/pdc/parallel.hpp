// Copyright 2026 The pdc Authors
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
#include <functional>

namespace pdc {

// Number of worker threads to use; 0 means hardware concurrency.
struct Parallelism {
  unsigned threads = 0;

  unsigned resolved() const;
};

// Runs task(i) for every i in [0, n_tasks), claiming indices dynamically.
// task(i) may be called from any worker; callers that need deterministic
// output must write results keyed by i and reduce afterwards.
void parallel_for(std::size_t n_tasks, Parallelism par,
                  const std::function<void(std::size_t task, unsigned worker)>& task);

}  // namespace pdc
