// Copyright 2026 The lrmlab Authors
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

#ifndef LRMLAB_PARALLEL_H
#define LRMLAB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace lrmlab {

/// LRMLAB_THREADS if set to a positive integer, else the hardware concurrency.
size_t default_thread_count();

/// Calls fn(chunk) once for every chunk in [0, num_chunks) using up to
/// `threads` workers. Chunks are claimed dynamically, so callers must make
/// results depend only on the chunk index. The first exception thrown by
/// any worker is rethrown after all workers stop.
void parallel_chunks(size_t num_chunks, size_t threads, const std::function<void(size_t)> &fn);

}  // namespace lrmlab

#endif
