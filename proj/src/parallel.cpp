#include "jcd/parallel.hpp"

#include <cstdlib>
#include <string>

namespace jcd {

int worker_count() {
    if (const char* env = std::getenv("JCD_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace jcd
