#include "zb/parallel.hpp"

namespace zb {
namespace {
std::atomic<int> g_max_threads{0}; // 0 = hardware default
}

int max_threads() {
    int n = g_max_threads.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0); }

} // namespace zb
