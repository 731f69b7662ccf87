#include "hecke/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "hecke/config.hpp"

namespace hecke {

RunConfig& config() {
    static RunConfig cfg;
    return cfg;
}

void for_indices(std::int64_t n, const std::function<void(std::int64_t)>& fill) {
    int jobs = config().jobs;
    if (jobs <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; i++) fill(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n) break;
            fill(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = (int)std::min<std::int64_t>(jobs, n);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; t++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace hecke
