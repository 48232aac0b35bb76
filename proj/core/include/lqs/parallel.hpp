// Copyright 2026 The LatticeQS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace lqs {

/// Worker count used when a call does not pass one explicitly. Starts at 1.
int default_thread_count();
void set_default_thread_count(int threads);

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// Indices are dealt out in contiguous chunks; callers write results into
/// per-index slots and reduce in index order, which keeps sums independent of
/// the thread count. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int threads = 0);

}  // namespace lqs
