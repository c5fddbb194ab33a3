#ifndef FTHR_PARALLEL_HPP
#define FTHR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fthr {

// Run body(i) for i in [0, count) on up to `workers` threads. Results are
// written by index, so the outcome does not depend on scheduling. The first
// exception (by index) is rethrown.
template <class Body>
void parallel_indexed(std::size_t count, unsigned workers, Body body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(workers, count);
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace fthr

#endif // FTHR_PARALLEL_HPP
