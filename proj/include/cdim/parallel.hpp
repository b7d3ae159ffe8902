#ifndef CDIM_PARALLEL_HPP
#define CDIM_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cdim {

// Runs fn(i) for i in [0, count) on up to `jobs` worker threads, writing
// results into index order. The merge is deterministic for any job count:
// results land in preassigned slots and exceptions are rethrown in index
// order.
template <typename Result>
std::vector<Result> parallel_map(size_t jobs, size_t count,
                                 const std::function<Result(size_t)>& fn) {
    std::vector<Result> results(count);
    if (count == 0) return results;
    if (jobs <= 1 || count == 1) {
        for (size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    size_t nthreads = std::min(jobs, count);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < count; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return results;
}

}  // namespace cdim

#endif
