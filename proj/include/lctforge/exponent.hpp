#pragma once

#include <vector>

#include "lctforge/errors.hpp"

namespace lctforge {

// Exponent vector of a monomial x^k: fixed length n, entries >= 0.
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& a) {
    int d = 0;
    for (int e : a) d += e;
    return d;
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent dimension mismatch");
    Exponent c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

// a | b componentwise, i.e. x^a divides x^b.
inline bool exp_divides(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// b - a; caller guarantees divisibility.
inline Exponent exp_sub(const Exponent& b, const Exponent& a) {
    Exponent c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = b[i] - a[i];
    return c;
}

inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent dimension mismatch");
    Exponent c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] > b[i] ? a[i] : b[i];
    return c;
}

inline Exponent exp_scale(const Exponent& a, int t) {
    Exponent c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * t;
    return c;
}

// Prunes a set of exponents to the divisibility antichain (minimal generators).
std::vector<Exponent> divisibility_antichain(std::vector<Exponent> points);

}  // namespace lctforge
