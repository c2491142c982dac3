#include "dressage/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dressage {

namespace {

// Below this many sites a thread pool costs more than it saves.
constexpr std::int64_t serial_cutoff = 1 << 15;
constexpr std::int64_t block_size = 1 << 14;

int read_thread_cap() {
    if (const char* env = std::getenv("DRESSAGE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<int>(std::min<long>(v, 256));
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int max_threads() {
    static const int cap = read_thread_cap();
    return cap;
}

void parallel_for_blocks(std::int64_t n,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (n <= 0)
        return;
    const int threads = max_threads();
    if (n <= serial_cutoff || threads <= 1) {
        fn(0, n);
        return;
    }
    const std::int64_t nblocks = (n + block_size - 1) / block_size;
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t b = next.fetch_add(1);
            if (b >= nblocks)
                return;
            const std::int64_t lo = b * block_size;
            fn(lo, std::min(lo + block_size, n));
        }
    };
    const int nworkers = static_cast<int>(std::min<std::int64_t>(threads, nblocks));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers - 1));
    for (int i = 1; i < nworkers; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
}

} // namespace dressage
