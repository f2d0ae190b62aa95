#include "darboux/parallel.hpp"

#include <atomic>

namespace darboux::parallel {

namespace {
std::atomic<unsigned> g_limit{0};
}

unsigned worker_count() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned limit = g_limit.load();
    return limit == 0 ? hw : limit;
}

void set_worker_limit(unsigned limit) { g_limit.store(limit); }

}  // namespace darboux::parallel
