#include "tiltrich/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "tiltrich/permcore.hpp"

namespace tiltrich {

namespace {

void read_env(const char* name, int& slot) {
    if (const char* s = std::getenv(name)) {
        try {
            slot = std::stoi(s);
        } catch (const std::exception&) {
            throw DomainError(std::string("bad value for ") + name);
        }
    }
}

}  // namespace

Gates& gates() {
    static Gates g = [] {
        Gates init;
        read_env("TILTRICH_MAX_BFS_N", init.max_bfs_n);
        read_env("TILTRICH_MAX_COUNT_N", init.max_count_n);
        read_env("TILTRICH_MAX_PATH_N", init.max_path_n);
        read_env("TILTRICH_MAX_GW_N", init.max_gw_n);
        read_env("TILTRICH_MAX_DESCENT_CYCLING_N", init.max_descent_cycling_n);
        read_env("TILTRICH_MAX_PRIME", init.max_prime);
        return init;
    }();
    return g;
}

void require_gate(int n, int limit, const std::string& what) {
    if (n > limit)
        throw DomainError(what + ": n=" + std::to_string(n) + " exceeds gate " + std::to_string(limit));
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex m;
    std::vector<std::thread> pool;
    const std::size_t block = (count + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t lo = t * block;
        const std::size_t hi = std::min(count, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace tiltrich
