#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace turan
{
    /// 0 or negative means one worker per hardware thread.
    inline int resolve_workers(int workers)
    {
        if (workers > 0)
            return workers;
        return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    }

    /// Applies fn to every item; results keep input order whatever the schedule.
    template <class T, class Fn>
    auto parallel_map(const std::vector<T> & items, int workers, Fn fn) -> std::vector<std::invoke_result_t<Fn &, const T &>>
    {
        using R = std::invoke_result_t<Fn &, const T &>;
        std::vector<R> results(items.size());
        int threads = std::min<int>(resolve_workers(workers), static_cast<int>(items.size()));
        if (threads <= 1) {
            for (std::size_t i = 0; i < items.size(); ++i)
                results[i] = fn(items[i]);
            return results;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size())
                    return;
                try {
                    results[i] = fn(items[i]);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = items.size();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
        return results;
    }
}
