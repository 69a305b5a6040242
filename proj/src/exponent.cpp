#include "lctforge/exponent.hpp"

#include <algorithm>

namespace lctforge {

std::vector<Exponent> divisibility_antichain(std::vector<Exponent> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Exponent> out;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points) {
            if (q != p && exp_divides(q, p)) { dominated = true; break; }
        }
        if (!dominated) out.push_back(p);
    }
    return out;
}

}  // namespace lctforge
