#include "lctforge/config.hpp"

#include <cstdlib>
#include <string>

namespace lctforge {

namespace {
int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        int parsed = std::stoi(v);
        return parsed > 0 ? parsed : fallback;
    } catch (...) {
        return fallback;
    }
}
}  // namespace

int degree_cap() { return env_int("LCTFORGE_DEGREE_CAP", 64); }
int default_trials() { return env_int("LCTFORGE_TRIALS", 3); }
int tmax_cap() { return env_int("LCTFORGE_TMAX_CAP", 4); }

}  // namespace lctforge
