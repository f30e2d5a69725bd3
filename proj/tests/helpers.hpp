#pragma once

#include <cstdlib>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "gdcalc/corpus.hpp"
#include "gdcalc/diagram.hpp"
#include "gdcalc/poly.hpp"

namespace testutil {

inline gdcalc::Poly P(std::initializer_list<std::pair<int, long long>> terms) {
    gdcalc::Poly p;
    for (const auto& [d, v] : terms) gdcalc::poly_add_term(p, d, v);
    return p;
}

inline const gdcalc::Diagram& dia(const std::string& name) {
    static std::map<std::string, gdcalc::Diagram> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, gdcalc::corpus_diagram(name)).first;
    return it->second;
}

// Same circles and signs, ignoring the diagram name.
inline bool same_shape(const gdcalc::Diagram& a, const gdcalc::Diagram& b) {
    return a.circles == b.circles && a.signs == b.signs &&
           a.classical == b.classical;
}

inline std::string env_or(const char* var, const std::string& fallback) {
    const char* v = std::getenv(var);
    return v && *v ? std::string(v) : fallback;
}

}  // namespace testutil
