#include "lacunae/config.hpp"

#include <cstdlib>
#include <string>

namespace lacunae {

std::size_t budget_bytes_from_env(std::size_t fallback) {
    const char* raw = std::getenv("LACUNAE_BUDGET_MB");
    if (!raw) return fallback;
    try {
        long long mb = std::stoll(raw);
        if (mb <= 0) return fallback;
        return static_cast<std::size_t>(mb) << 20;
    } catch (...) {
        return fallback;
    }
}

}  // namespace lacunae
