#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace tiltrich {

// Size limits for the exhaustive kernels.
struct Gates {
    int max_bfs_n = 8;
    int max_count_n = 4;
    int max_path_n = 5;
    int max_gw_n = 4;
    int max_descent_cycling_n = 4;
    int max_prime = 97;
};

// Process-wide gates, initialised from TILTRICH_MAX_BFS_N, TILTRICH_MAX_COUNT_N, TILTRICH_MAX_PATH_N,
// TILTRICH_MAX_GW_N, TILTRICH_MAX_DESCENT_CYCLING_N and TILTRICH_MAX_PRIME on first use.
Gates& gates();
void require_gate(int n, int limit, const std::string& what);

unsigned default_workers();

// Runs body(i) for i in [0, count) split into contiguous blocks across workers.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace tiltrich
