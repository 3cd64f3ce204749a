// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace salem {

/// out[i] = f(i) for i < n on up to hardware_concurrency workers. Rethrows the first exception.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F f) {
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errs(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    for (auto& e : errs)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace salem
