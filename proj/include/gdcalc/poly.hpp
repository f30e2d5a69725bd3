#pragma once

#include <map>

namespace gdcalc {

// Integer polynomial in one variable, degree -> coefficient.
// All helpers keep the map normalized: zero coefficients are never stored.
using Poly = std::map<int, long long>;

inline void poly_add_term(Poly& p, int degree, long long value) {
    if (value == 0) return;
    auto it = p.find(degree);
    if (it == p.end()) {
        p.emplace(degree, value);
    } else if ((it->second += value) == 0) {
        p.erase(it);
    }
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [d, v] : b) poly_add_term(r, d, -v);
    return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [d, v] : b) poly_add_term(r, d, v);
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [da, va] : a)
        for (const auto& [db, vb] : b) poly_add_term(r, da + db, va * vb);
    return r;
}

// Multiply by z^by (shift every degree up).
inline Poly poly_shift(const Poly& a, int by = 1) {
    Poly r;
    for (const auto& [d, v] : a) r.emplace(d + by, v);
    return r;
}

inline long long poly_coeff(const Poly& a, int degree) {
    auto it = a.find(degree);
    return it == a.end() ? 0 : it->second;
}

}  // namespace gdcalc
