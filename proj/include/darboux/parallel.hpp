#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace darboux::parallel {

/// Number of workers used by data-parallel loops (>= 1).
unsigned worker_count();

/// Sets the worker count (may exceed the core count); 0 restores the hardware default.
void set_worker_limit(unsigned limit);

/// Runs body(i) for i in [0, n). Indices are split into contiguous blocks,
/// one per worker; the first exception thrown is rethrown on the caller.
template <class Body>
void for_each_index(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
                try {
                    for (std::size_t i = begin; i < end; ++i) body(i);
                } catch (...) {
                    std::lock_guard lock(guard);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace darboux::parallel
