#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ricci {

inline std::size_t default_thread_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Evaluates fn(0..count-1) on up to `threads` workers. Results are stored by
/// index, so the output does not depend on scheduling. The first exception
/// thrown by any task is rethrown on the calling thread.
template <class Fn>
auto parallel_map(std::size_t count, std::size_t threads, Fn&& fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> results(count);
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace ricci
