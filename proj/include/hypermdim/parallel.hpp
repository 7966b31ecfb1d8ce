// Copyright 2026 The hypermdim Authors
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

namespace hypermdim {

// Worker count used by parallel_for. Defaults to HYPERMDIM_WORKERS when set,
// else the hardware concurrency. Results never depend on this value.
int worker_count();
void set_worker_count(int workers);

// Calls body(i) for every i in [0, n), splitting the range into contiguous
// blocks across workers. Exceptions thrown by body are rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hypermdim
