#include "gdcalc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "gdcalc/corpus.hpp"
#include "gdcalc/family.hpp"
#include "gdcalc/invariants.hpp"
#include "gdcalc/moves.hpp"
#include "gdcalc/poly.hpp"
#include "gdcalc/random_walk.hpp"
#include "gdcalc/skein.hpp"
#include "gdcalc/trace.hpp"

namespace gdcalc {

namespace {

struct CaseResult {
    bool ok = true;
    std::string detail;
    std::string diagram;
    std::vector<std::string> trace;
};

std::string poly_str(const Poly& p) {
    std::ostringstream o;
    o << "{";
    bool first = true;
    for (const auto& [n, v] : p) {
        if (!first) o << ", ";
        o << n << ":" << v;
        first = false;
    }
    o << "}";
    return o.str();
}

std::vector<std::string> encode_trace(const std::vector<MoveSite>& moves) {
    std::vector<std::string> out;
    out.reserve(moves.size());
    for (const MoveSite& s : moves) out.push_back(encode_site(s));
    return out;
}

long long vec_at(const std::vector<long long>& v, int n) {
    return n >= 0 && n < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(n)] : 0;
}

Poly poly_from(const std::vector<long long>& v) {
    Poly p;
    for (int n = 0; n < static_cast<int>(v.size()); ++n)
        poly_add_term(p, n, v[static_cast<std::size_t>(n)]);
    return p;
}

// The Conway pair (ascending, descending) the suites consume. Under fault
// injection both are corrupted by +k at degree 0, so any identity that pits
// them against an independent computation (or against a diagram with a
// different arrow count) must blow up.
std::pair<Poly, Poly> conway_pair(const Diagram& d, bool fault) {
    const ScanResult sc = state_scan(d, false);
    Poly a = poly_from(sc.A);
    Poly de = poly_from(sc.D);
    if (fault) {
        poly_add_term(a, 0, d.arrow_count());
        poly_add_term(de, 0, d.arrow_count());
    }
    return {std::move(a), std::move(de)};
}

std::vector<long long> ad_vector(const Diagram& d, int upto) {
    const ScanResult sc = state_scan(d, false);
    std::vector<long long> out(static_cast<std::size_t>(upto) + 1, 0);
    for (int n = 0; n <= upto; ++n)
        out[static_cast<std::size_t>(n)] = vec_at(sc.A2, n) + vec_at(sc.D2, n);
    return out;
}

// ---- identity checks (each returns a failure description or nothing) ----

// For every crossing: conway(positive) - conway(negative) = z * conway(smoothed),
// per mode, on any diagram.
std::optional<std::string> triple_defect(const Diagram& d, bool fault) {
    for (int a = 0; a < d.arrow_count(); ++a) {
        const bool pos = d.signs[static_cast<std::size_t>(a)] > 0;
        const Diagram gp = pos ? d : switch_crossing(d, a);
        const Diagram gm = pos ? switch_crossing(d, a) : d;
        const Diagram g0 = smooth_arrow(gp, a);
        const auto [pa, pd] = conway_pair(gp, fault);
        const auto [ma, md] = conway_pair(gm, fault);
        const auto [za, zd] = conway_pair(g0, fault);
        for (Mode mo : {Mode::Asc, Mode::Desc}) {
            const Poly got = poly_sub(mo == Mode::Asc ? pa : pd, mo == Mode::Asc ? ma : md);
            const Poly want = poly_shift(mo == Mode::Asc ? za : zd, 1);
            if (got != want) {
                std::ostringstream o;
                o << "skein triple at arrow " << a << " (" << mode_name(mo)
                  << "): difference " << poly_str(got) << ", smoothed gives "
                  << poly_str(want);
                return o.str();
            }
        }
    }
    return std::nullopt;
}

// Two-boundary skein: AD(positive) - AD(negative) at degree n equals
// AD(smoothed) at n-1, plus — when the smoothing splits a circle — the Conway
// convolution over sublinks separating the two pieces.
std::optional<std::string> two_boundary_skein_defect(const Diagram& d, int nmax) {
    for (int a = 0; a < d.arrow_count(); ++a) {
        const bool pos = d.signs[static_cast<std::size_t>(a)] > 0;
        const Diagram gp = pos ? d : switch_crossing(d, a);
        const Diagram gm = pos ? switch_crossing(d, a) : d;
        const Diagram g0 = smooth_arrow(gp, a);
        const auto adp = ad_vector(gp, nmax);
        const auto adm = ad_vector(gm, nmax);
        const auto ad0 = ad_vector(g0, nmax);
        const EndpointMap pos_map = endpoint_map(gp);
        const EndpointPos h = at(pos_map, a, End::Head);
        const EndpointPos t = at(pos_map, a, End::Tail);
        const bool split = h.circle == t.circle;
        for (int n = 0; n <= nmax; ++n) {
            const long long lhs = vec_at(adp, n) - vec_at(adm, n);
            long long rhs = n >= 1 ? vec_at(ad0, n - 1) : 0;
            if (split && n >= 1) {
                const int cidx = h.index < t.index ? h.circle : t.circle;
                const int new1 = cidx, new2 = cidx + 1;
                const int m0 = g0.circle_count();
                for (unsigned mask = 1; mask + 1 < (1u << m0); ++mask) {
                    const bool in1 = (mask >> new1) & 1u;
                    const bool in2 = (mask >> new2) & 1u;
                    if (in1 == in2) continue;
                    std::vector<int> keep, rest;
                    for (int c = 0; c < m0; ++c)
                        (((mask >> c) & 1u) ? keep : rest).push_back(c);
                    const Poly c1 = conway(sublink(g0, keep), Mode::Asc);
                    const Poly c2 = conway(sublink(g0, rest), Mode::Asc);
                    for (int i = 0; i < n; ++i)
                        rhs += poly_coeff(c1, i) * poly_coeff(c2, n - 1 - i);
                }
            }
            if (lhs != rhs) {
                std::ostringstream o;
                o << "two-boundary skein at arrow " << a << ", degree " << n
                  << ": AD difference " << lhs << ", resolution gives " << rhs;
                return o.str();
            }
        }
    }
    return std::nullopt;
}

// Kink insertion: one-boundary counts are untouched; a head-first kink of
// sign eps shifts the ascending two-boundary count at degree n by
// eps * A_{n-1}, a tail-first kink shifts the descending count by
// eps * D_{n-1}. On classical diagrams the AD sum moves by eps * c_{n-1}
// while I stays fixed.
std::optional<std::string> om1_defect(const Diagram& d, bool fault) {
    const auto [base_asc, base_desc] = conway_pair(d, fault);
    const ScanResult base = state_scan(d, false);
    const int kmax = d.arrow_count() + 1;
    for (int c = 0; c < d.circle_count(); ++c) {
        auto slots = slot_list(d, c);
        if (slots.size() > 3) slots.resize(3);
        for (int s : slots)
            for (int eps : {1, -1})
                for (bool hf : {true, false}) {
                    const Diagram dd = om1_insert(d, c, s, eps, hf);
                    const auto [cur_asc, cur_desc] = conway_pair(dd, fault);
                    if (cur_asc != base_asc || cur_desc != base_desc) {
                        std::ostringstream o;
                        o << "kink insert (circle " << c << ", slot " << s << ", eps "
                          << eps << ") moved a Conway polynomial: asc "
                          << poly_str(cur_asc) << " vs " << poly_str(base_asc);
                        return o.str();
                    }
                    const ScanResult cur = state_scan(dd, false);
                    for (int n = 0; n <= kmax + 1; ++n) {
                        const long long da = vec_at(cur.A2, n) - vec_at(base.A2, n);
                        const long long db = vec_at(cur.D2, n) - vec_at(base.D2, n);
                        const long long ea =
                            hf && n >= 1 ? eps * vec_at(base.A, n - 1) : 0;
                        const long long eb =
                            !hf && n >= 1 ? eps * vec_at(base.D, n - 1) : 0;
                        if (da != ea || db != eb) {
                            std::ostringstream o;
                            o << "kink two-boundary defect (circle " << c << ", slot "
                              << s << ", eps " << eps << ", head_first " << hf
                              << ", degree " << n << "): asc moved " << da
                              << " want " << ea << ", desc moved " << db << " want "
                              << eb;
                            return o.str();
                        }
                        if (d.classical) {
                            const long long want = eps * poly_coeff(base_asc, n - 1);
                            if ((da + db) != want) {
                                std::ostringstream o;
                                o << "kink AD defect at degree " << n << ": moved "
                                  << (da + db) << " want " << want;
                                return o.str();
                            }
                            if (i_coeff(dd, n) != i_coeff(d, n)) {
                                std::ostringstream o;
                                o << "kink changed I at degree " << n;
                                return o.str();
                            }
                        }
                    }
                }
    }
    return std::nullopt;
}

// Framed kink pairs leave every count alone, and deleting the fresh pair
// restores the diagram exactly.
std::optional<std::string> om1f_defect(const Diagram& d, bool fault) {
    const auto [base_asc, base_desc] = conway_pair(d, fault);
    const ScanResult base = state_scan(d, false);
    const int k = d.arrow_count();
    const int kmax = k + 2;
    for (int c = 0; c < d.circle_count(); ++c) {
        auto slots = slot_list(d, c);
        if (slots.size() > 3) slots.resize(3);
        for (int s : slots)
            for (int eps : {1, -1})
                for (bool hf : {true, false}) {
                    const Diagram dd = om1f_insert(d, c, s, eps, hf);
                    const ScanResult cur = state_scan(dd, false);
                    for (int n = 0; n <= kmax + 1; ++n)
                        if (vec_at(cur.A2, n) != vec_at(base.A2, n) ||
                            vec_at(cur.D2, n) != vec_at(base.D2, n)) {
                            std::ostringstream o;
                            o << "framed kink pair moved a two-boundary count at degree "
                              << n << " (circle " << c << ", slot " << s << ")";
                            return o.str();
                        }
                    const auto [cur_asc, cur_desc] = conway_pair(dd, fault);
                    if (cur_asc != base_asc || cur_desc != base_desc) {
                        std::ostringstream o;
                        o << "framed kink pair moved a Conway polynomial (circle " << c
                          << ", slot " << s << ", eps " << eps << ")";
                        return o.str();
                    }
                    bool found = false;
                    for (const Om1fSite& site : om1f_delete_sites(dd))
                        if ((site.arrow_a == k && site.arrow_b == k + 1) ||
                            (site.arrow_a == k + 1 && site.arrow_b == k))
                            found = true;
                    if (!found) return "framed kink pair left no delete site back";
                    const Diagram d2 = om1f_delete(dd, k, k + 1);
                    if (d2.circles != d.circles || d2.signs != d.signs)
                        return "framed kink delete did not invert the insert";
                }
    }
    return std::nullopt;
}

// Double-point pair insertion leaves all one- and two-boundary counts alone
// and is undone by deleting the fresh pair.
std::optional<std::string> om2_defect(const Diagram& d, int limit) {
    const ScanResult base = state_scan(d, false);
    const int k = d.arrow_count();
    int count = 0;
    for (const MoveSite& s : list_insert_sites(d)) {
        if (s.kind != MoveKind::Om2Insert) continue;
        if (++count > limit) break;
        const Diagram dd = apply_move(d, s);
        const ScanResult cur = state_scan(dd, false);
        for (int n = 0; n <= dd.arrow_count(); ++n)
            if (vec_at(cur.A, n) != vec_at(base.A, n) ||
                vec_at(cur.D, n) != vec_at(base.D, n) ||
                vec_at(cur.A2, n) != vec_at(base.A2, n) ||
                vec_at(cur.D2, n) != vec_at(base.D2, n)) {
                std::ostringstream o;
                o << "double-point insert moved a count at degree " << n << " ("
                  << encode_site(s) << ")";
                return o.str();
            }
        bool found = false;
        for (const auto& [x, y] : om2_delete_sites(dd))
            if ((x == k && y == k + 1) || (x == k + 1 && y == k)) found = true;
        if (!found) return "double-point insert left no delete site back: " + encode_site(s);
        const Diagram d2 = om2_delete(dd, k, k + 1);
        if (d2.circles != d.circles || d2.signs != d.signs)
            return "double-point delete did not invert the insert: " + encode_site(s);
    }
    return std::nullopt;
}

// Triangle slides leave all one- and two-boundary counts alone on every
// corpus diagram, and applying the same site twice restores the diagram.
std::optional<std::string> om3_corpus_defect(const Diagram& d) {
    const ScanResult base = state_scan(d, false);
    for (const MoveSite& s : om3_sites(d)) {
        const Diagram dd = om3_apply(d, s);
        const ScanResult cur = state_scan(dd, false);
        for (int n = 0; n <= d.arrow_count(); ++n)
            if (vec_at(cur.A, n) != vec_at(base.A, n) ||
                vec_at(cur.D, n) != vec_at(base.D, n) ||
                vec_at(cur.A2, n) != vec_at(base.A2, n) ||
                vec_at(cur.D2, n) != vec_at(base.D2, n)) {
                std::ostringstream o;
                o << "triangle slide moved a count at degree " << n << " ("
                  << encode_site(s) << ")";
                return o.str();
            }
        const Diagram back = om3_apply(dd, s);
        if (back.circles != d.circles)
            return "triangle slide applied twice is not the identity: " + encode_site(s);
    }
    return std::nullopt;
}

// Base-point independence of the Conway polynomials and the AD vector on a
// classical diagram, over every circle and gap.
std::optional<std::string> basepoint_defect(const Diagram& d, bool fault,
                                            bool include_skein) {
    const auto [base_asc, base_desc] = conway_pair(d, fault);
    const int kmax = d.arrow_count() + 1;
    const auto base_ad = ad_vector(d, kmax);
    for (int c = 0; c < d.circle_count(); ++c) {
        const int gaps =
            std::max<int>(1, static_cast<int>(d.circles[static_cast<std::size_t>(c)].size()));
        for (int g = 0; g < gaps; ++g) {
            const Diagram dd = move_base_point(d, c, g);
            const auto [cur_asc, cur_desc] = conway_pair(dd, fault);
            if (cur_asc != base_asc || cur_desc != base_desc) {
                std::ostringstream o;
                o << "base point (circle " << c << ", gap " << g
                  << ") moved a Conway polynomial: asc " << poly_str(cur_asc)
                  << " vs " << poly_str(base_asc);
                return o.str();
            }
            if (ad_vector(dd, kmax) != base_ad) {
                std::ostringstream o;
                o << "base point (circle " << c << ", gap " << g
                  << ") moved the AD vector";
                return o.str();
            }
            if (include_skein && conway_skein(dd) != base_asc) {
                std::ostringstream o;
                o << "base point (circle " << c << ", gap " << g
                  << ") disagrees with the skein recursion: "
                  << poly_str(conway_skein(dd)) << " vs " << poly_str(base_asc);
                return o.str();
            }
        }
    }
    return std::nullopt;
}

// Every separating-state group of the two-boundary sums equals sigma(sep)
// times the Conway convolution of the two labeled smoothed sublinks.
std::optional<std::string> separating_factor_defect(const Diagram& d) {
    const ScanResult sc = state_scan(d, true);
    for (Mode mo : {Mode::Asc, Mode::Desc}) {
        const GroupedSums& grouped = mo == Mode::Asc ? sc.grouped_asc : sc.grouped_desc;
        for (const auto& [n, groups] : grouped)
            for (const auto& [key, val] : groups) {
                const SmoothAllResult sm = smooth_all(d, key.separating, &key.labels);
                std::vector<int> keep1, keep2;
                for (int i = 0; i < static_cast<int>(sm.labels.size()); ++i) {
                    if (sm.labels[static_cast<std::size_t>(i)] == 1) keep1.push_back(i);
                    if (sm.labels[static_cast<std::size_t>(i)] == 2) keep2.push_back(i);
                }
                if (keep1.empty() || keep2.empty())
                    return "a separating group produced a one-sided labeling";
                const Diagram base = make_diagram(sm.diagram.circles, sm.diagram.signs,
                                                  true, "");
                const Poly c1 = conway_skein(sublink(base, keep1));
                const Poly c2 = conway_skein(sublink(base, keep2));
                const int j = n - std::popcount(key.separating);
                long long rhs = 0;
                for (int i = 0; i <= j; ++i)
                    rhs += poly_coeff(c1, i) * poly_coeff(c2, j - i);
                rhs *= sigma(d, key.separating);
                if (val != rhs) {
                    std::ostringstream o;
                    o << "separating group at degree " << n << " (" << mode_name(mo)
                      << ", separating mask " << key.separating << ") sums to " << val
                      << ", convolution gives " << rhs;
                    return o.str();
                }
            }
    }
    return std::nullopt;
}

// Surface invariants of every state: Euler count, crossing and arc tallies,
// boundary parity, genus bound, and agreement with one-shot smoothing.
std::optional<std::string> battery_defect(const Diagram& d) {
    const int k = d.arrow_count();
    const int m = d.circle_count();
    for (StateMask bits = 0; bits < (StateMask{1} << k); ++bits) {
        const TraceResult tr = trace(d, bits);
        const int n = std::popcount(bits);
        if (tr.euler != m - n) return "euler count mismatch";
        std::size_t crossings = 0, arcs = 0;
        for (const TraceCycle& cyc : tr.cycles) {
            crossings += cyc.crossings.size();
            arcs += cyc.arcs.size();
        }
        if (crossings != 2 * static_cast<std::size_t>(n)) return "crossing tally mismatch";
        std::size_t want_arcs = 0;
        for (const Circle& circ : d.circles) {
            std::size_t members = 0;
            for (const Tok& t : circ)
                if ((bits >> t.arrow) & 1u) ++members;
            want_arcs += members > 0 ? members : 1;
        }
        if (arcs != want_arcs) return "arc tally mismatch";
        if (tr.connected) {
            const int parity = tr.b - (m - n);
            if (((parity % 2) + 2) % 2 != 0) return "boundary parity violation";
            if (tr.genus < 0 && tr.b <= 2) return "negative genus";
        }
        const SmoothAllResult sm = smooth_all(d, bits);
        if (sm.diagram.circle_count() != tr.b)
            return "smoothing all state arrows disagrees with the boundary count";
        if (sm.diagram.arrow_count() != k - n)
            return "smoothing all state arrows kept a wrong arrow count";
    }
    return std::nullopt;
}

std::optional<std::string> smooth_arrow_defect(const Diagram& d) {
    for (int a = 0; a < d.arrow_count(); ++a) {
        const Diagram s = smooth_arrow(d, a);
        const int dc = s.circle_count() - d.circle_count();
        if (dc != 1 && dc != -1) return "smoothing must merge or split exactly once";
        if (s.arrow_count() != d.arrow_count() - 1) return "smoothing kept the arrow";
    }
    return std::nullopt;
}

// one_boundary - irreducible at degree n = lk * Conway convolution of the two
// components, on an ordered 2-circle diagram.
std::optional<std::string> reducible2_defect(const Diagram& d, int nmax) {
    const Poly cl = conway(sublink(d, {0}), Mode::Asc);
    const Poly ck = conway(sublink(d, {1}), Mode::Asc);
    const long long lk = lk2(d);
    for (int n = 0; n <= nmax; ++n)
        for (Mode mo : {Mode::Asc, Mode::Desc}) {
            const long long lhs =
                one_boundary_coeff(d, n, mo) - irreducible_coeff(d, n, mo);
            long long rhs = 0;
            for (int i = 0; i < n; ++i)
                rhs += poly_coeff(cl, i) * poly_coeff(ck, n - i - 1);
            rhs *= lk;
            if (lhs != rhs) {
                std::ostringstream o;
                o << "reducible-part identity failed at degree " << n << " ("
                  << mode_name(mo) << "): " << lhs << " vs " << rhs;
                return o.str();
            }
        }
    return std::nullopt;
}

std::optional<std::string> airdir_defect(const Diagram& d, int nmax) {
    for (int n = 0; n <= nmax; ++n) {
        const long long a = irreducible_coeff(d, n, Mode::Asc);
        const long long b = irreducible_coeff(d, n, Mode::Desc);
        if (a != b) {
            std::ostringstream o;
            o << "irreducible asc/desc disagree at degree " << n << ": " << a
              << " vs " << b;
            return o.str();
        }
    }
    return std::nullopt;
}

std::optional<std::string> knot_plain_defect(const Diagram& d, int nmax) {
    for (int n = 0; n <= nmax; ++n)
        for (Mode mo : {Mode::Asc, Mode::Desc})
            if (irreducible_coeff(d, n, mo) != one_boundary_coeff(d, n, mo)) {
                std::ostringstream o;
                o << "irreducible differs from the plain count on a knot at degree "
                  << n;
                return o.str();
            }
    return std::nullopt;
}

std::optional<std::string> knot_refinement_defect(const Diagram& d) {
    for (int n = 0; n <= d.arrow_count() + 1; ++n) {
        const long long i = i_coeff(d, n);
        const long long ia = knot_i_coeff(d, n, Mode::Asc);
        const long long id = knot_i_coeff(d, n, Mode::Desc);
        const long long p = p_coeff(d, n);
        if (i != ia + id || p != i) {
            std::ostringstream o;
            o << "knot refinement at degree " << n << ": I=" << i << " IA+ID="
              << (ia + id) << " p=" << p;
            return o.str();
        }
    }
    return std::nullopt;
}

std::optional<std::string> consum_defect(const Diagram& d1, const Diagram& d2,
                                         bool fault) {
    const Diagram cs = connected_sum(d1, d2);
    const auto [a1, de1] = conway_pair(d1, fault);
    const auto [a2, de2] = conway_pair(d2, fault);
    const auto [ac, dec] = conway_pair(cs, fault);
    if (ac != poly_mul(a1, a2) || dec != poly_mul(de1, de2)) {
        std::ostringstream o;
        o << "connected sum is not multiplicative: asc " << poly_str(ac) << " vs "
          << poly_str(poly_mul(a1, a2));
        return o.str();
    }
    return std::nullopt;
}

std::optional<std::string> grouped_partition_defect(const Diagram& d) {
    const ScanResult sc = state_scan(d, true);
    for (Mode mo : {Mode::Asc, Mode::Desc}) {
        const GroupedSums& grouped = mo == Mode::Asc ? sc.grouped_asc : sc.grouped_desc;
        const auto& totals = mo == Mode::Asc ? sc.A2 : sc.D2;
        for (const auto& [n, groups] : grouped) {
            long long sum = 0;
            for (const auto& [key, val] : groups) sum += val;
            if (sum != vec_at(totals, n)) {
                std::ostringstream o;
                o << "separating groups do not partition the two-boundary sum at degree "
                  << n << " (" << mode_name(mo) << ")";
                return o.str();
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> family_pairing_defect(const Diagram& d, int nmax) {
    const int m = d.circle_count();
    for (int n = 0; n <= nmax; ++n)
        for (int b : {1, 2})
            for (Mode mo : {Mode::Asc, Mode::Desc}) {
                const long long fam = family_pairing_sum(d, n, m, b, mo);
                const long long direct = b == 1 ? one_boundary_coeff(d, n, mo)
                                                : two_boundary_coeff(d, n, mo);
                if (fam != direct) {
                    std::ostringstream o;
                    o << "family pairing sum at degree " << n << " (boundary " << b
                      << ", " << mode_name(mo) << ") gives " << fam
                      << ", the state sum gives " << direct;
                    return o.str();
                }
            }
    return std::nullopt;
}

// ---- suite construction ----

using CorpusCase = std::pair<std::string, std::function<CaseResult()>>;

struct SuiteDef {
    std::vector<CorpusCase> corpus_cases;
    std::function<CaseResult(std::uint64_t, int)> trial;
};

CaseResult from_defect(const std::optional<std::string>& defect, const Diagram& d,
                       const std::vector<MoveSite>* trace = nullptr) {
    CaseResult r;
    if (defect) {
        r.ok = false;
        r.detail = *defect;
        r.diagram = serialize(d);
        if (trace) r.trace = encode_trace(*trace);
    }
    return r;
}

std::vector<Diagram> classical_corpus() {
    std::vector<Diagram> out;
    for (const Diagram& d : corpus_diagrams())
        if (d.classical) out.push_back(d);
    return out;
}

WalkResult walk_from(const char* base, std::uint64_t seed, int moves, int max_arrows) {
    return random_classical(seed, corpus_diagram(base), moves, max_arrows);
}

SuiteDef build_skein(const VerifyOptions& opt) {
    SuiteDef def;
    const bool fault = opt.inject_fault;
    for (const Diagram& d : corpus_diagrams())
        def.corpus_cases.push_back({"triple " + d.name, [d, fault] {
            return from_defect(triple_defect(d, fault), d);
        }});
    for (const Diagram& d : classical_corpus())
        def.corpus_cases.push_back({"two-boundary-skein " + d.name, [d] {
            return from_defect(two_boundary_skein_defect(d, d.arrow_count() + 1), d);
        }});
    const int max_arrows = opt.max_arrows;
    def.trial = [fault, max_arrows](std::uint64_t ts, int t) {
        if (t % 3 == 2) {
            static const char* bases[] = {"trefoil", "hopf-plus", "figure-eight", "h2",
                                          "chain-three"};
            const WalkResult w = walk_from(bases[(t / 3) % 5], ts, 4, max_arrows);
            auto defect = triple_defect(w.diagram, fault);
            if (!defect) defect = two_boundary_skein_defect(w.diagram, w.diagram.arrow_count() + 1);
            return from_defect(defect, w.diagram, &w.trace);
        }
        const Diagram d = random_diagram(ts, 1 + t % 3, std::min(3 + t % 4, max_arrows));
        return from_defect(triple_defect(d, fault), d);
    };
    return def;
}

SuiteDef build_moves(const VerifyOptions& opt) {
    SuiteDef def;
    const bool fault = opt.inject_fault;
    for (const Diagram& d : corpus_diagrams()) {
        def.corpus_cases.push_back({"kink-laws " + d.name, [d, fault] {
            return from_defect(om1_defect(d, fault), d);
        }});
        def.corpus_cases.push_back({"framed-kink-laws " + d.name, [d, fault] {
            return from_defect(om1f_defect(d, fault), d);
        }});
        def.corpus_cases.push_back({"double-point-laws " + d.name, [d] {
            return from_defect(om2_defect(d, 120), d);
        }});
        def.corpus_cases.push_back({"triangle-laws " + d.name, [d] {
            return from_defect(om3_corpus_defect(d), d);
        }});
    }
    const int max_arrows = opt.max_arrows;
    def.trial = [fault, max_arrows](std::uint64_t ts, int t) -> CaseResult {
        const int u = t / 3;
        static const char* bases[] = {"trefoil", "hopf-plus", "figure-eight"};
        if (t % 3 == 0) {
            // Triangle slides on a realizable perturbation: planarity survives
            // and every count is unchanged.
            const WalkResult w = walk_from(bases[u % 3], ts, 3, max_arrows);
            const Diagram& d = w.diagram;
            const ScanResult base = state_scan(d, false);
            const auto [base_asc, base_desc] = conway_pair(d, fault);
            auto sites = om3_sites(d);
            if (sites.size() > 4) sites.resize(4);
            for (const MoveSite& s : sites) {
                const Diagram dd = om3_apply(d, s);
                if (!is_planar(dd))
                    return from_defect("triangle slide broke realizability: " +
                                       encode_site(s), d, &w.trace);
                const auto [cur_asc, cur_desc] = conway_pair(dd, fault);
                if (cur_asc != base_asc || cur_desc != base_desc)
                    return from_defect("triangle slide moved a Conway polynomial: " +
                                       encode_site(s), d, &w.trace);
                const ScanResult cur = state_scan(dd, false);
                for (int n = 0; n <= d.arrow_count(); ++n)
                    if (vec_at(cur.A2, n) != vec_at(base.A2, n) ||
                        vec_at(cur.D2, n) != vec_at(base.D2, n))
                        return from_defect("triangle slide moved a two-boundary count: " +
                                           encode_site(s), d, &w.trace);
            }
            return {};
        }
        if (t % 3 == 1) {
            // Triangle slides on a non-realizable ambient still preserve the
            // one-boundary counts.
            Diagram d = corpus_diagram(bases[u % 3]);
            Rng rng(ts);
            std::vector<MoveSite> applied;
            for (int step = 0; step < 2; ++step) {
                std::vector<MoveSite> ins;
                for (const MoveSite& s : list_insert_sites(d))
                    if (s.kind == MoveKind::Om2Insert) ins.push_back(s);
                const MoveSite pick =
                    ins[static_cast<std::size_t>(rng.below(ins.size()))];
                d = apply_move(d, pick);
                applied.push_back(pick);
            }
            d.classical = false;
            const ScanResult base = state_scan(d, false);
            auto sites = om3_sites(d);
            if (sites.size() > 4) sites.resize(4);
            for (const MoveSite& s : sites) {
                const Diagram dd = om3_apply(d, s);
                const ScanResult cur = state_scan(dd, false);
                for (int n = 0; n <= d.arrow_count(); ++n)
                    if (vec_at(cur.A, n) != vec_at(base.A, n) ||
                        vec_at(cur.D, n) != vec_at(base.D, n))
                        return from_defect("triangle slide moved a one-boundary count "
                                           "on a virtual ambient: " + encode_site(s),
                                           d, &applied);
            }
            return {};
        }
        // Insert/delete roundtrips on a random ambient.
        const Diagram d = random_diagram(ts, 1 + u % 2, std::min(2 + u % 3, max_arrows));
        const int k = d.arrow_count();
        Rng rng(ts ^ 0x6a09e667f3bcc909ULL);
        std::vector<MoveSite> sites = list_insert_sites(d);
        rng.shuffle(sites);
        if (sites.size() > 4) sites.resize(4);
        for (const MoveSite& s : sites) {
            const Diagram dd = apply_move(d, s);
            Diagram d2 = d;
            if (s.kind == MoveKind::Om1Insert) {
                const auto back = om1_delete_sites(dd);
                if (std::find(back.begin(), back.end(), k) == back.end())
                    return from_defect("kink insert left no delete site: " +
                                       encode_site(s), d);
                d2 = om1_delete(dd, k);
            } else if (s.kind == MoveKind::Om1fInsert) {
                d2 = om1f_delete(dd, k, k + 1);
            } else {
                d2 = om2_delete(dd, k, k + 1);
            }
            if (d2.circles != d.circles || d2.signs != d.signs)
                return from_defect("insert/delete pair is not the identity: " +
                                   encode_site(s), d);
        }
        return {};
    };
    return def;
}

SuiteDef build_basepoint(const VerifyOptions& opt) {
    SuiteDef def;
    const bool fault = opt.inject_fault;
    for (const Diagram& d : classical_corpus())
        def.corpus_cases.push_back({"independence " + d.name, [d, fault] {
            return from_defect(basepoint_defect(d, fault, true), d);
        }});
    const int max_arrows = opt.max_arrows;
    def.trial = [fault, max_arrows](std::uint64_t ts, int t) -> CaseResult {
        static const char* bases[] = {"trefoil", "h2", "unknot"};
        const WalkResult w = walk_from(bases[t % 3], ts, 10, max_arrows);
        if (!is_planar(w.diagram))
            return from_defect("walk left the realizable category", w.diagram,
                               &w.trace);
        return from_defect(basepoint_defect(w.diagram, fault, false), w.diagram,
                           &w.trace);
    };
    return def;
}

SuiteDef build_oracle(const VerifyOptions& opt) {
    SuiteDef def;
    const bool fault = opt.inject_fault;
    for (const Diagram& d : classical_corpus())
        def.corpus_cases.push_back({"conway-oracle " + d.name, [d, fault] {
            const auto [a, de] = conway_pair(d, fault);
            const Poly sk = conway_skein(d);
            if (a != de || a != sk) {
                CaseResult r;
                r.ok = false;
                r.detail = "state sums and skein recursion disagree: asc " +
                           poly_str(a) + ", desc " + poly_str(de) + ", skein " +
                           poly_str(sk);
                r.diagram = serialize(d);
                return r;
            }
            return CaseResult{};
        }});
    def.corpus_cases.push_back({"family-sizes", [] {
        CaseResult r;
        const bool ok = enumerate_family(1, 1, 1, Mode::Asc).empty() &&
                        enumerate_family(2, 1, 1, Mode::Asc).size() == 1 &&
                        enumerate_family(2, 1, 1, Mode::Desc).size() == 1 &&
                        enumerate_family(2, 2, 2, Mode::Asc).size() == 5 &&
                        enumerate_family(2, 1, 2, Mode::Asc).empty() &&
                        !enumerate_family(1, 1, 2, Mode::Asc).empty() &&
                        enumerate_family(3, 1, 1, Mode::Asc).empty();
        if (!ok) {
            r.ok = false;
            r.detail = "family enumeration sizes are off";
        }
        return r;
    }});
    def.corpus_cases.push_back({"pairing-units", [] {
        CaseResult r;
        const Diagram empty1 = make_diagram({Circle{}}, {});
        const Diagram k_t = make_diagram({Circle{{0, End::Tail}, {0, End::Head}}}, {1});
        const Diagram k_h = make_diagram({Circle{{0, End::Head}, {0, End::Tail}}}, {1});
        const Diagram kink = corpus_diagram("kink-plus");
        const auto fam = enumerate_family(2, 1, 1, Mode::Asc);
        const bool ok = pairing(empty1, corpus_diagram("trefoil")) == 1 &&
                        pairing(k_t, kink) == 1 && pairing(k_h, kink) == 0 &&
                        fam.size() == 1 &&
                        pairing(fam[0], corpus_diagram("virtual-trefoil")) == 1;
        if (!ok) {
            r.ok = false;
            r.detail = "embedding counts of the smallest arrow diagrams are off";
        }
        return r;
    }});
    for (const Diagram& d : corpus_diagrams())
        if (d.circle_count() <= 2)
            def.corpus_cases.push_back({"family-pairing " + d.name, [d] {
                return from_defect(family_pairing_defect(d, 3), d);
            }});
    const int max_arrows = opt.max_arrows;
    def.trial = [fault, max_arrows](std::uint64_t ts, int t) -> CaseResult {
        const int u = t / 2;
        if (t % 2 == 0) {
            static const char* bases[] = {"trefoil", "hopf-plus", "figure-eight", "h2",
                                          "chain-three"};
            const WalkResult w = walk_from(bases[u % 5], ts, 8, max_arrows);
            const auto [a, de] = conway_pair(w.diagram, fault);
            const Poly sk = conway_skein(w.diagram);
            if (a != de || a != sk) {
                CaseResult r;
                r.ok = false;
                r.detail = "state sums and skein recursion disagree: asc " +
                           poly_str(a) + ", desc " + poly_str(de) + ", skein " +
                           poly_str(sk);
                r.diagram = serialize(w.diagram);
                r.trace = encode_trace(w.trace);
                return r;
            }
            return CaseResult{};
        }
        const Diagram d =
            random_diagram(ts, 1 + u % 2, std::min(2 + u % 4, max_arrows));
        return from_defect(family_pairing_defect(d, 3), d);
    };
    return def;
}

SuiteDef build_factorization(const VerifyOptions& opt) {
    SuiteDef def;
    for (const Diagram& d : classical_corpus())
        if (d.arrow_count() <= 10)
            def.corpus_cases.push_back({"grouped " + d.name, [d] {
                return from_defect(separating_factor_defect(d), d);
            }});
    const int max_arrows = std::min(10, opt.max_arrows);
    def.trial = [max_arrows](std::uint64_t ts, int t) {
        static const char* bases[] = {"kink-plus", "hopf-plus", "trefoil",
                                      "figure-eight", "h2", "chain-three"};
        const WalkResult w = walk_from(bases[t % 6], ts, 6, max_arrows);
        return from_defect(separating_factor_defect(w.diagram), w.diagram, &w.trace);
    };
    return def;
}

SuiteDef build_irreducible(const VerifyOptions& opt) {
    SuiteDef def;
    for (const Diagram& d : classical_corpus())
        def.corpus_cases.push_back({"asc-desc " + d.name, [d] {
            return from_defect(airdir_defect(d, d.arrow_count()), d);
        }});
    for (const char* name : {"trefoil", "figure-eight", "kink-plus"}) {
        const Diagram d = corpus_diagram(name);
        def.corpus_cases.push_back({std::string("knot-plain ") + name, [d] {
            return from_defect(knot_plain_defect(d, 4), d);
        }});
    }
    def.corpus_cases.push_back({"hopf-degree-1", [] {
        CaseResult r;
        const Diagram d = corpus_diagram("hopf-plus");
        if (irreducible_coeff(d, 1, Mode::Asc) != 0 ||
            irreducible_coeff(d, 1, Mode::Desc) != 0) {
            r.ok = false;
            r.detail = "the spanning arrow of the positive Hopf link must not count "
                       "as irreducible at degree 1";
            r.diagram = serialize(d);
        }
        return r;
    }});
    for (const char* name : {"hopf-plus", "h2"}) {
        const Diagram d = corpus_diagram(name);
        def.corpus_cases.push_back({std::string("reducible-2comp ") + name, [d] {
            return from_defect(reducible2_defect(d, 5), d);
        }});
    }
    const int max_arrows = opt.max_arrows;
    def.trial = [max_arrows](std::uint64_t ts, int t) -> CaseResult {
        const int u = t / 2;
        if (t % 2 == 0) {
            static const char* bases[] = {"trefoil", "figure-eight", "kink-plus"};
            const WalkResult w = walk_from(bases[u % 3], ts, 6, max_arrows);
            auto defect = airdir_defect(w.diagram, w.diagram.arrow_count());
            if (!defect) defect = knot_plain_defect(w.diagram, 4);
            return from_defect(defect, w.diagram, &w.trace);
        }
        static const char* bases[] = {"hopf-plus", "h2"};
        const WalkResult w = walk_from(bases[u % 2], ts, 6, max_arrows);
        auto defect = reducible2_defect(w.diagram, 5);
        if (!defect) defect = airdir_defect(w.diagram, 5);
        return from_defect(defect, w.diagram, &w.trace);
    };
    return def;
}

SuiteDef build_structural(const VerifyOptions& opt) {
    SuiteDef def;
    for (const Diagram& d : corpus_diagrams())
        def.corpus_cases.push_back({"battery " + d.name, [d] {
            auto defect = battery_defect(d);
            if (!defect) defect = smooth_arrow_defect(d);
            return from_defect(defect, d);
        }});
    const int max_arrows = opt.max_arrows;
    def.trial = [max_arrows](std::uint64_t ts, int t) {
        const Diagram d =
            random_diagram(ts, 1 + t % 3, std::min(2 + t % 4, max_arrows));
        auto defect = battery_defect(d);
        if (!defect && t % 2 == 1) defect = smooth_arrow_defect(d);
        return from_defect(defect, d);
    };
    return def;
}

SuiteDef build_sums(const VerifyOptions& opt) {
    SuiteDef def;
    const bool fault = opt.inject_fault;
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"trefoil", "trefoil"},
        {"trefoil", "figure-eight"},
        {"kink-plus", "trefoil"},
        {"virtual-trefoil", "virtual-trefoil"},
        {"kishino", "trefoil"},
    };
    for (const auto& [n1, n2] : pairs) {
        const Diagram d1 = corpus_diagram(n1);
        const Diagram d2 = corpus_diagram(n2);
        def.corpus_cases.push_back(
            {std::string("connected-sum ") + n1 + "#" + n2, [d1, d2, fault] {
                return from_defect(consum_defect(d1, d2, fault), connected_sum(d1, d2));
            }});
    }
    def.corpus_cases.push_back({"split-term-values", [] {
        CaseResult r;
        const Diagram o2 = corpus_diagram("two-component-unlink");
        const Diagram h2 = corpus_diagram("h2");
        bool ok = c_coeff(o2, 0) == 2 && c_coeff(h2, 0) == 2;
        for (int n : {1, 2, 3, 4}) ok = ok && c_coeff(h2, n) == 0;
        if (!ok) {
            r.ok = false;
            r.detail = "split-sublink convolution values are off";
            r.diagram = serialize(h2);
        }
        return r;
    }});
    def.corpus_cases.push_back({"p-values", [] {
        CaseResult r;
        const Diagram h2 = corpus_diagram("h2");
        const Diagram tre = corpus_diagram("trefoil");
        const Diagram o2 = corpus_diagram("two-component-unlink");
        const Diagram o3 = disjoint_union(o2, corpus_diagram("unknot"));
        const Diagram unk = corpus_diagram("unknot");
        const Diagram f8 = corpus_diagram("figure-eight");
        bool ok = p_coeff(h2, 0) == 2 && p_coeff(h2, 2) == -4;
        for (int n : {1, 3, 4, 5}) ok = ok && p_coeff(h2, n) == 0;
        ok = ok && p_coeff(tre, 3) == -2;
        for (int n : {0, 1, 2, 4}) ok = ok && p_coeff(tre, n) == 0;
        ok = ok && p_coeff(o2, 0) == 2;
        for (int n : {1, 2}) ok = ok && p_coeff(o2, n) == 0;
        for (int n : {0, 1, 2}) ok = ok && p_coeff(o3, n) == 0 && p_coeff(unk, n) == 0;
        for (int n = 0; n <= 5; ++n) ok = ok && p_coeff(f8, n) == 0;
        if (!ok) {
            r.ok = false;
            r.detail = "pinned p values are off";
        }
        return r;
    }});
    for (const char* name : {"trefoil", "h2", "kishino"}) {
        const Diagram d = corpus_diagram(name);
        def.corpus_cases.push_back({std::string("grouped-partition ") + name, [d] {
            return from_defect(grouped_partition_defect(d), d);
        }});
    }
    for (const Diagram& d : classical_corpus())
        if (d.circle_count() == 1)
            def.corpus_cases.push_back({"knot-refinement " + d.name, [d] {
                return from_defect(knot_refinement_defect(d), d);
            }});
    const int max_arrows = opt.max_arrows;
    def.trial = [fault, max_arrows](std::uint64_t ts, int t) -> CaseResult {
        const int u = t / 3;
        if (t % 3 == 0) {
            const Diagram d1 =
                random_diagram(ts, 1, std::min(2 + u % 3, max_arrows));
            const Diagram d2 = random_diagram(ts ^ 0x5851f42d4c957f2dULL, 1,
                                              std::min(2 + (u + 1) % 3, max_arrows));
            auto defect = consum_defect(d1, d2, fault);
            return from_defect(defect, connected_sum(d1, d2));
        }
        if (t % 3 == 1) {
            const Diagram d =
                random_diagram(ts, 1 + u % 2, std::min(3 + u % 3, max_arrows));
            return from_defect(grouped_partition_defect(d), d);
        }
        static const char* bases[] = {"trefoil", "hopf-plus", "h2"};
        const Diagram base = corpus_diagram(bases[u % 3]);
        const WalkResult w = random_classical(ts, base, 6, max_arrows);
        for (int n = 0; n <= 4; ++n)
            if (p_coeff(w.diagram, n) != p_coeff(base, n)) {
                std::ostringstream o;
                o << "p changed along a classical walk at degree " << n << ": "
                  << p_coeff(w.diagram, n) << " vs " << p_coeff(base, n);
                return from_defect(o.str(), w.diagram, &w.trace);
            }
        return {};
    };
    return def;
}

SuiteDef build_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "skein") return build_skein(opt);
    if (name == "moves") return build_moves(opt);
    if (name == "basepoint") return build_basepoint(opt);
    if (name == "oracle") return build_oracle(opt);
    if (name == "factorization") return build_factorization(opt);
    if (name == "irreducible") return build_irreducible(opt);
    if (name == "structural") return build_structural(opt);
    if (name == "sums") return build_sums(opt);
    throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "skein",  "moves",       "basepoint",  "oracle",
        "factorization", "irreducible", "structural", "sums"};
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    const SuiteDef def = build_suite(name, opt);
    SuiteReport rep;
    rep.suite = name;
    std::vector<Counterexample> fails;

    long long index = 0;
    for (const auto& [context, fn] : def.corpus_cases) {
        CaseResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (r.ok) {
            ++rep.passed;
        } else {
            fails.push_back({index, "corpus " + context, r.detail, r.diagram, r.trace});
        }
        ++index;
    }

    if (def.trial && opt.trials > 0) {
        const long long corpus_count = index;
        const int workers =
            std::max(1, std::min(resolve_threads(opt.threads), opt.trials));
        std::atomic<int> next{0};
        std::atomic<long long> passed{0};
        std::mutex mu;
        auto work = [&] {
            for (;;) {
                const int t = next.fetch_add(1);
                if (t >= opt.trials) break;
                const std::uint64_t ts =
                    opt.seed * 1000003ULL + static_cast<std::uint64_t>(t);
                CaseResult r;
                try {
                    r = def.trial(ts, t);
                } catch (const std::exception& e) {
                    r.ok = false;
                    r.detail = std::string("exception: ") + e.what();
                }
                if (r.ok) {
                    passed.fetch_add(1);
                } else {
                    std::lock_guard<std::mutex> lock(mu);
                    fails.push_back({corpus_count + t, "trial " + std::to_string(t),
                                     r.detail, r.diagram, r.trace});
                }
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        rep.passed += passed.load();
    }

    rep.failed = static_cast<long long>(fails.size());
    std::sort(fails.begin(), fails.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return a.index < b.index;
              });
    if (!fails.empty()) {
        rep.first = fails.front();
        if (opt.collect_failures)
            for (std::size_t i = 1; i < fails.size() && i <= 10; ++i)
                rep.failures.push_back(fails[i]);
    }
    return rep;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opt) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const std::string& s : suite_names()) out.push_back(run_suite(s, opt));
        return out;
    }
    out.push_back(run_suite(name, opt));
    return out;
}

}  // namespace gdcalc
