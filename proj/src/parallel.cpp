#include "lcstat/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace lcstat {

int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("LCSTAT_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) hw = std::min(hw, cap);
        } catch (...) {
        }
    }
    return hw;
}

void parallel_chunks(int n_chunks, const std::function<void(int)>& fn) {
    const int workers = std::min(max_threads(), n_chunks);
    if (workers <= 1) {
        for (int c = 0; c < n_chunks; ++c) fn(c);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) fn(c);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace lcstat
