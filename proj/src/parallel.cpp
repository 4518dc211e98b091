#include "fuscat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fuscat {

int default_workers() {
    const char* env = std::getenv("FUSCAT_PARALLEL");
    if (!env) return 1;
    try {
        int n = std::stoi(env);
        return n > 0 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    std::size_t w = static_cast<std::size_t>(std::max(1, workers));
    w = std::min(w, n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < w; ++t) threads.emplace_back(body);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace fuscat
