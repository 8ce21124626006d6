#include "stokesmac/threading.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace stokesmac {

int max_threads() {
    static const int cached = [] {
        const char* env = std::getenv("STOKES_MAC_THREADS");
        if (!env) return 1;
        try {
            const int v = std::stoi(env);
            return v >= 1 ? v : 1;
        } catch (...) {
            return 1;
        }
    }();
    return cached;
}

void run_pair(const std::function<void()>& a, const std::function<void()>& b) {
    if (max_threads() >= 2) {
        std::thread t(a);
        b();
        t.join();
    } else {
        a();
        b();
    }
}

}  // namespace stokesmac
