// SPDX-License-Identifier: Apache-2.0
//
// Minimal index-partitioned parallel loop used by the sweep evaluators.
// Each worker owns a contiguous, precomputed index range and writes results
// into preallocated slots, so the output is identical for every thread
// count.  The first exception thrown by any worker is rethrown on the
// calling thread after all workers have joined.

#ifndef MMWLINK_DETAIL_PARALLEL_FOR_HPP
#define MMWLINK_DETAIL_PARALLEL_FOR_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mmwlink::detail
{

template <typename Body>
void parallel_for(std::size_t count, unsigned n_threads, const Body &body)
{
    if (count == 0)
        return;

    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n_threads, count));
    if (workers == 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::mutex error_mutex;
    std::exception_ptr first_error;
    const std::size_t chunk = (count + workers - 1) / workers;

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&, begin, end]() {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            }
            catch (...)
            {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto &thread : threads)
        thread.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace mmwlink::detail

#endif // MMWLINK_DETAIL_PARALLEL_FOR_HPP
