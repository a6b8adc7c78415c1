#pragma once

#include "dtroots/signature.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dtroots {

/// Evaluates fn(x, cache) for every x in [first, last] and returns the
/// results in ascending x order. Work is spread over `jobs` threads, each
/// with its own SearchCache; jobs <= 1 runs inline.
template <class Result, class Fn>
std::vector<Result> parallel_sweep(Int first, Int last, unsigned jobs, Fn fn)
{
    std::vector<Result> results;
    if (last < first)
        return results;
    const auto count = static_cast<std::size_t>(last - first + 1);
    results.resize(count);

    if (jobs <= 1) {
        SearchCache cache;
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(first + static_cast<Int>(i), cache);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        SearchCache cache;
        try {
            for (std::size_t i = next++; i < count; i = next++)
                results[i] = fn(first + static_cast<Int>(i), cache);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace dtroots
