#include "gdcalc/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <thread>

namespace gdcalc {

int resolve_threads(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("GDCALC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? static_cast<int>(hw) : 1;
}

namespace {

constexpr int kMaxStateArrows = 16;

void check_state_bound(const Diagram& d) {
    if (d.arrow_count() > kMaxStateArrows)
        throw PreconditionError("state sums are bounded at " +
                                std::to_string(kMaxStateArrows) + " arrows, got " +
                                std::to_string(d.arrow_count()));
}

void scan_range(const Diagram& d, StateMask lo, StateMask hi, bool with_groups,
                ScanResult* out) {
    for (StateMask bits = lo; bits < hi; ++bits) {
        const TraceResult tr = trace(d, bits);
        if (!tr.connected) continue;
        const int n = std::popcount(bits);
        const int sg = sigma(d, bits);
        const bool asc = classify_asc(tr, bits);
        const bool desc = classify_desc(tr, bits);
        if (tr.b == 1) {
            if (asc) out->A[static_cast<std::size_t>(n)] += sg;
            if (desc) out->D[static_cast<std::size_t>(n)] += sg;
        } else if (tr.b == 2) {
            if (asc) out->A2[static_cast<std::size_t>(n)] += sg;
            if (desc) out->D2[static_cast<std::size_t>(n)] += sg;
            if (with_groups && (asc || desc)) {
                GroupKey key{tr.separating, tr.labels};
                if (asc) out->grouped_asc[n][key] += sg;
                if (desc) out->grouped_desc[n][key] += sg;
            }
        }
    }
}

void merge_grouped(GroupedSums* into, const GroupedSums& from) {
    for (const auto& [n, groups] : from)
        for (const auto& [key, value] : groups) (*into)[n][key] += value;
}

}  // namespace

ScanResult state_scan(const Diagram& d, bool with_groups, int threads) {
    check_state_bound(d);
    const int k = d.arrow_count();
    ScanResult res;
    res.A.assign(static_cast<std::size_t>(k) + 1, 0);
    res.D.assign(static_cast<std::size_t>(k) + 1, 0);
    res.A2.assign(static_cast<std::size_t>(k) + 1, 0);
    res.D2.assign(static_cast<std::size_t>(k) + 1, 0);
    const StateMask total = StateMask{1} << k;
    const int workers = std::min<long long>(resolve_threads(threads),
                                            std::max<long long>(total / 1024, 1));
    // Below 2^13 states a serial sweep wins, and verification trials (bounded
    // at 12 arrows) stay single-threaded inside their own worker pool.
    if (workers <= 1 || k < 13) {
        scan_range(d, 0, total, with_groups, &res);
        return res;
    }
    std::vector<ScanResult> parts(static_cast<std::size_t>(workers));
    for (auto& p : parts) {
        p.A.assign(static_cast<std::size_t>(k) + 1, 0);
        p.D.assign(static_cast<std::size_t>(k) + 1, 0);
        p.A2.assign(static_cast<std::size_t>(k) + 1, 0);
        p.D2.assign(static_cast<std::size_t>(k) + 1, 0);
    }
    std::vector<std::thread> pool;
    const StateMask chunk = total / static_cast<StateMask>(workers);
    for (int w = 0; w < workers; ++w) {
        const StateMask lo = chunk * static_cast<StateMask>(w);
        const StateMask hi = (w + 1 == workers) ? total : lo + chunk;
        pool.emplace_back([&, lo, hi, w] {
            scan_range(d, lo, hi, with_groups, &parts[static_cast<std::size_t>(w)]);
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : parts) {
        for (int n = 0; n <= k; ++n) {
            res.A[static_cast<std::size_t>(n)] += p.A[static_cast<std::size_t>(n)];
            res.D[static_cast<std::size_t>(n)] += p.D[static_cast<std::size_t>(n)];
            res.A2[static_cast<std::size_t>(n)] += p.A2[static_cast<std::size_t>(n)];
            res.D2[static_cast<std::size_t>(n)] += p.D2[static_cast<std::size_t>(n)];
        }
        merge_grouped(&res.grouped_asc, p.grouped_asc);
        merge_grouped(&res.grouped_desc, p.grouped_desc);
    }
    return res;
}

namespace {

long long coeff_or_zero(const std::vector<long long>& v, int n) {
    if (n < 0 || n >= static_cast<int>(v.size())) return 0;
    return v[static_cast<std::size_t>(n)];
}

}  // namespace

long long one_boundary_coeff(const Diagram& d, int n, Mode mode) {
    if (n < 0) return 0;
    const ScanResult sc = state_scan(d, false);
    return coeff_or_zero(mode == Mode::Asc ? sc.A : sc.D, n);
}

long long two_boundary_coeff(const Diagram& d, int n, Mode mode) {
    if (n < 0) return 0;
    const ScanResult sc = state_scan(d, false);
    return coeff_or_zero(mode == Mode::Asc ? sc.A2 : sc.D2, n);
}

Poly conway(const Diagram& d, Mode mode) {
    const ScanResult sc = state_scan(d, false);
    const auto& v = mode == Mode::Asc ? sc.A : sc.D;
    Poly p;
    for (int n = 0; n < static_cast<int>(v.size()); ++n)
        poly_add_term(p, n, v[static_cast<std::size_t>(n)]);
    return p;
}

Poly nabla_ad(const Diagram& d) {
    const ScanResult sc = state_scan(d, false);
    Poly p;
    for (int n = 0; n < static_cast<int>(sc.A.size()); ++n)
        poly_add_term(p, n,
                      sc.A[static_cast<std::size_t>(n)] - sc.D[static_cast<std::size_t>(n)]);
    return p;
}

long long ad_coeff(const Diagram& d, int n) {
    if (n < 0) return 0;
    const ScanResult sc = state_scan(d, false);
    return coeff_or_zero(sc.A2, n) + coeff_or_zero(sc.D2, n);
}

long long i_coeff(const Diagram& d, int n) {
    const ScanResult sc = state_scan(d, false);
    return coeff_or_zero(sc.A2, n) + coeff_or_zero(sc.D2, n) -
           static_cast<long long>(writhe(d)) * coeff_or_zero(sc.A, n - 1);
}

long long knot_i_coeff(const Diagram& d, int n, Mode mode) {
    if (d.circle_count() != 1)
        throw PreconditionError("knot refinement needs a one-circle diagram");
    const WritheProfile prof = writhe_profile(d);
    const ScanResult sc = state_scan(d, false);
    const long long w = mode == Mode::Asc ? prof.wA : prof.wD;
    return coeff_or_zero(mode == Mode::Asc ? sc.A2 : sc.D2, n) -
           w * coeff_or_zero(sc.A, n - 1);
}

long long c_coeff(const Diagram& d, int n) {
    if (!d.classical)
        throw PreconditionError("C requires the classical flag");
    const int m = d.circle_count();
    if (m == 1) return 0;
    long long total = 0;
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
        std::vector<int> keep, rest;
        for (int c = 0; c < m; ++c)
            ((mask >> c) & 1u ? keep : rest).push_back(c);
        const Poly c1 = conway(sublink(d, keep), Mode::Asc);
        const Poly c2 = conway(sublink(d, rest), Mode::Asc);
        for (int i = 0; i <= n; ++i)
            total += poly_coeff(c1, i) * poly_coeff(c2, n - i);
    }
    return total;
}

long long p_coeff(const Diagram& d, int n) {
    if (!d.classical)
        throw PreconditionError("p requires the classical flag");
    return i_coeff(d, n) + c_coeff(d, n);
}

long long irreducible_coeff(const Diagram& d, int n, Mode mode) {
    check_state_bound(d);
    if (n < 0) return 0;
    const int k = d.arrow_count();
    long long tot = 0;
    for (StateMask bits = 0; bits < (StateMask{1} << k); ++bits) {
        if (std::popcount(bits) != n) continue;
        const TraceResult tr = trace(d, bits);
        if (!tr.connected || tr.b != 1) continue;
        const bool ok = mode == Mode::Asc ? classify_asc(tr, bits)
                                          : classify_desc(tr, bits);
        if (!ok) continue;
        if (!bridge_arrows(d, bits).empty()) continue;
        tot += sigma(d, bits);
    }
    return tot;
}

GroupedSums grouped_two_boundary(const Diagram& d, Mode mode) {
    ScanResult sc = state_scan(d, true);
    return mode == Mode::Asc ? std::move(sc.grouped_asc) : std::move(sc.grouped_desc);
}

Kind kind_from_string(const std::string& s, Mode mode) {
    std::string t;
    for (char ch : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (t == "a") return Kind::A;
    if (t == "d") return Kind::D;
    if (t == "conway") return mode == Mode::Asc ? Kind::NablaA : Kind::NablaD;
    if (t == "nablaa" || t == "nabla-a") return Kind::NablaA;
    if (t == "nablad" || t == "nabla-d") return Kind::NablaD;
    if (t == "nablaad" || t == "nabla-ad") return Kind::NablaAD;
    if (t == "a2") return Kind::A2;
    if (t == "d2") return Kind::D2;
    if (t == "ad") return Kind::AD;
    if (t == "i") return Kind::I;
    if (t == "ia") return Kind::IA;
    if (t == "id") return Kind::ID;
    if (t == "air") return Kind::AIr;
    if (t == "dir") return Kind::DIr;
    if (t == "c") return Kind::C;
    if (t == "p") return Kind::P;
    throw PreconditionError("unknown invariant kind '" + s + "'");
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::D: return "D";
        case Kind::NablaA: return "nablaA";
        case Kind::NablaD: return "nablaD";
        case Kind::NablaAD: return "nablaAD";
        case Kind::A2: return "A2";
        case Kind::D2: return "D2";
        case Kind::AD: return "AD";
        case Kind::I: return "I";
        case Kind::IA: return "IA";
        case Kind::ID: return "ID";
        case Kind::AIr: return "AIr";
        case Kind::DIr: return "DIr";
        case Kind::C: return "C";
        case Kind::P: return "P";
    }
    return "?";
}

bool kind_is_polynomial(Kind k) {
    return k == Kind::NablaA || k == Kind::NablaD || k == Kind::NablaAD;
}

ComputeOutcome compute_invariant(const Diagram& d, Kind kind,
                                 std::optional<int> degree) {
    ComputeOutcome out;
    if (kind_is_polynomial(kind)) {
        if (degree)
            throw PreconditionError("polynomial kinds take no degree");
        out.is_polynomial = true;
        switch (kind) {
            case Kind::NablaA: out.poly = conway(d, Mode::Asc); break;
            case Kind::NablaD: out.poly = conway(d, Mode::Desc); break;
            default: out.poly = nabla_ad(d); break;
        }
        return out;
    }
    if (!degree)
        throw PreconditionError("coefficient kinds require --degree");
    const int n = *degree;
    if (n < 0) throw PreconditionError("degree must be non-negative");
    switch (kind) {
        case Kind::A: out.scalar = one_boundary_coeff(d, n, Mode::Asc); break;
        case Kind::D: out.scalar = one_boundary_coeff(d, n, Mode::Desc); break;
        case Kind::A2: out.scalar = two_boundary_coeff(d, n, Mode::Asc); break;
        case Kind::D2: out.scalar = two_boundary_coeff(d, n, Mode::Desc); break;
        case Kind::AD: out.scalar = ad_coeff(d, n); break;
        case Kind::I: out.scalar = i_coeff(d, n); break;
        case Kind::IA: out.scalar = knot_i_coeff(d, n, Mode::Asc); break;
        case Kind::ID: out.scalar = knot_i_coeff(d, n, Mode::Desc); break;
        case Kind::AIr: out.scalar = irreducible_coeff(d, n, Mode::Asc); break;
        case Kind::DIr: out.scalar = irreducible_coeff(d, n, Mode::Desc); break;
        case Kind::C: out.scalar = c_coeff(d, n); break;
        case Kind::P: out.scalar = p_coeff(d, n); break;
        default: break;
    }
    return out;
}

std::vector<StateTerm> contributing_states(const Diagram& d, Kind kind, int degree) {
    check_state_bound(d);
    int boundary;
    std::optional<Mode> mode;
    bool irreducible_only = false;
    switch (kind) {
        case Kind::A: boundary = 1; mode = Mode::Asc; break;
        case Kind::D: boundary = 1; mode = Mode::Desc; break;
        case Kind::A2: boundary = 2; mode = Mode::Asc; break;
        case Kind::D2: boundary = 2; mode = Mode::Desc; break;
        case Kind::AD: boundary = 2; break;
        case Kind::AIr: boundary = 1; mode = Mode::Asc; irreducible_only = true; break;
        case Kind::DIr: boundary = 1; mode = Mode::Desc; irreducible_only = true; break;
        default:
            throw PreconditionError(
                "explanations are available for direct state-sum kinds only "
                "(A, D, A2, D2, AD, AIr, DIr)");
    }
    const int k = d.arrow_count();
    std::vector<StateTerm> out;
    for (StateMask bits = 0; bits < (StateMask{1} << k); ++bits) {
        if (std::popcount(bits) != degree) continue;
        const TraceResult tr = trace(d, bits);
        if (!tr.connected || tr.b != boundary) continue;
        const bool asc = classify_asc(tr, bits);
        const bool desc = classify_desc(tr, bits);
        const bool match = mode ? (*mode == Mode::Asc ? asc : desc) : (asc || desc);
        if (!match) continue;
        if (irreducible_only && !bridge_arrows(d, bits).empty()) continue;
        out.push_back({bits, sigma(d, bits)});
    }
    std::sort(out.begin(), out.end(), [](const StateTerm& a, const StateTerm& b) {
        const int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
        if (pa != pb) return pa < pb;
        return a.mask < b.mask;
    });
    return out;
}

}  // namespace gdcalc
