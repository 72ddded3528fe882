#include "kabminor/parallel.hpp"

#include <cstdlib>
#include <string>

namespace kabminor {

std::size_t default_jobs() {
    if (const char* env = std::getenv("KAB_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace kabminor
