// SPDX-License-Identifier: Apache-2.0
//
// aoa-toolkit — gridless angle-of-arrival estimation for MIMO radar
// Copyright (C) 2026 aoa-toolkit contributors
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

#ifndef AOA_THREADING_HPP
#define AOA_THREADING_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace aoa
{
    // Worker cap: AOA_THREADS if set (>= 1), otherwise hardware concurrency.
    inline unsigned thread_count()
    {
        if (const char *env = std::getenv("AOA_THREADS"))
        {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1)
                return unsigned(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1;
    }

    // Runs fn(begin, end, chunk_index) over fixed-size chunks of [0, count).
    // Chunk boundaries depend only on (count, chunk_size), never on the worker
    // count, so callers that store per-chunk results and reduce them in chunk
    // order get identical output no matter how many threads executed.
    template <typename Fn>
    void parallel_chunks(std::size_t count, std::size_t chunk_size, Fn &&fn)
    {
        if (count == 0)
            return;
        if (chunk_size == 0)
            chunk_size = 1;
        const std::size_t n_chunks = (count + chunk_size - 1) / chunk_size;
        const unsigned workers =
            unsigned(std::min<std::size_t>(thread_count(), n_chunks));

        if (workers <= 1)
        {
            for (std::size_t c = 0; c < n_chunks; ++c)
                fn(c * chunk_size, std::min(count, (c + 1) * chunk_size), c);
            return;
        }

        std::atomic<std::size_t> next{0};
        auto work = [&]()
        {
            for (;;)
            {
                const std::size_t c = next.fetch_add(1);
                if (c >= n_chunks)
                    return;
                fn(c * chunk_size, std::min(count, (c + 1) * chunk_size), c);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto &t : pool)
            t.join();
    }

    inline std::size_t chunk_count(std::size_t count, std::size_t chunk_size)
    {
        return chunk_size == 0 ? count : (count + chunk_size - 1) / chunk_size;
    }
}

#endif
