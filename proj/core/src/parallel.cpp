#include "bisite/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bisite {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BISITE_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t > 0) return t;
        } catch (...) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int begin, int end, int threads, const std::function<void(int)>& fn) {
    const int count = end - begin;
    if (count <= 0) return;
    threads = std::min(std::max(threads, 1), count);
    if (threads == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int chunk = (count + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(lo + chunk, end);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace bisite
