// Copyright 2026 The onc Authors
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

#ifndef ONC_PARALLEL_HPP
#define ONC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace onc {

inline unsigned default_thread_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Evaluates `work(block)` for block = 0..blocks-1 on up to `threads` workers
/// and returns the per-block results in block order. Results therefore never
/// depend on the worker count as long as `work` depends only on its index.
template <typename Result, typename Work>
std::vector<Result> map_blocks(std::uint64_t blocks, unsigned threads, Work work) {
    std::vector<Result> results(blocks);
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(blocks, 1)));
    if (threads == 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) results[b] = work(b);
        return results;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::uint64_t b = next++; b < blocks; b = next++) {
                try {
                    results[b] = work(b);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto &worker : pool) worker.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace onc

#endif  // ONC_PARALLEL_HPP
