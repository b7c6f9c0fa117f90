// SPDX-License-Identifier: Apache-2.0
//
// mmwear: location-dependent SINR coverage for indoor mmWave wearable networks
// Copyright (C) 2026 mmwear contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMWEAR_PARALLEL_HPP
#define MMWEAR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mmwear
{

inline unsigned resolve_workers(unsigned requested) noexcept
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(i) for every i in [0, n). Work is handed out dynamically, so callers must write
// results by index; nothing about the output may depend on which thread ran which item.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body &&body)
{
    workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(n, 1)));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (;;)
        {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n)
                return;
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(n, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(run);
    run();
    for (auto &th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace mmwear

#endif
