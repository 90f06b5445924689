#include "cablewrench/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace cablewrench {

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(resolve_thread_count(threads), std::max<std::size_t>(n, 1));
    if (n == 0) return;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    // Static block partition: worker w handles [w*q + min(w,r), ...) where
    // q = n/workers, r = n%workers. Block boundaries depend only on (n, workers).
    const std::size_t q = n / static_cast<std::size_t>(workers);
    const std::size_t r = n % static_cast<std::size_t>(workers);

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::size_t uw = static_cast<std::size_t>(w);
        const std::size_t begin = uw * q + std::min(uw, r);
        const std::size_t end = begin + q + (uw < r ? 1 : 0);
        pool.emplace_back([&, begin, end, uw]() {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[uw] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace cablewrench
