#include "lrw/util.hpp"

#include <cstdlib>
#include <thread>

namespace lrw {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

unsigned thread_cap() {
    if (const char* env = std::getenv("WORKBENCH_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned cap = thread_cap();
    if (cap <= 1 || n < 4) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    unsigned workers = cap < n ? cap : static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += workers)
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

}  // namespace lrw
