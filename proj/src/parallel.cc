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

#include "lrmlab/parallel.h"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lrmlab {

size_t default_thread_count() {
    if (const char *env = std::getenv("LRMLAB_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return (size_t)v;
            }
        } catch (const std::exception &) {
        }
    }
    size_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_chunks(size_t num_chunks, size_t threads, const std::function<void(size_t)> &fn) {
    if (threads <= 1 || num_chunks <= 1) {
        for (size_t c = 0; c < num_chunks; c++) {
            fn(c);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load()) {
            size_t c = next.fetch_add(1);
            if (c >= num_chunks) {
                return;
            }
            try {
                fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    size_t count = std::min(threads, num_chunks);
    for (size_t t = 0; t < count; t++) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace lrmlab
