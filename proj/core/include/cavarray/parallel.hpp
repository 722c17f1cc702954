// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// parallel.hpp: minimal worker pool over an index range

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cavarray {

// Number of workers to use when the caller does not say: hardware concurrency, at least 1.
inline unsigned default_jobs() {
    return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(i) for i in [0, count) on up to `jobs` threads. Indices are handed out
// dynamically. The first exception thrown by any call is rethrown after all
// workers have stopped.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace cavarray
