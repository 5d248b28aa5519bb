#include "tribracket/axioms.hpp"

#include <omp.h>

#include <cstdint>
#include <sstream>

namespace tribracket {

std::string Violation::describe() const {
    static const char* names[] = {"axiom (i)", "axiom (ii)", "entropic"};
    static const char* vars[] = {"x", "y", "z", "u", "v", "w", "a", "b", "c"};
    std::ostringstream out;
    out << names[kind] << " witness:";
    if (kind == axiom_i) {
        static const char* dirs[] = {"z", "y", "x"};
        out << " free slot " << dirs[tuple[0]] << ", fixed (" << tuple[1] + 1 << ","
            << tuple[2] + 1 << "), repeated value " << tuple[3] + 1;
    } else {
        for (int i = 0; i < arity; ++i) out << ' ' << vars[i] << '=' << tuple[i] + 1;
    }
    return out.str();
}

bool check_axiom_i(const TribracketTable& t, Violation* witness) {
    const int n = t.order();
    // Latin cube in all three directions: fixing any two arguments, the map in
    // the remaining slot is a bijection.
    for (int dir = 0; dir < 3; ++dir) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::uint32_t seen = 0;
                for (int k = 0; k < n; ++k) {
                    elem v = dir == 0 ? t.at(i, j, k) : dir == 1 ? t.at(i, k, j) : t.at(k, i, j);
                    if (seen & (1u << v)) {
                        if (witness) *witness = {Violation::axiom_i, {dir, i, j, v}, 4};
                        return false;
                    }
                    seen |= 1u << v;
                }
            }
        }
    }
    return true;
}

bool check_axiom_ii(const TribracketTable& t, Violation* witness) {
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const elem e1 = t.at(x, y, z);
                for (int w = 0; w < n; ++w) {
                    const elem e2 = t.at(x, y, w);
                    const elem e3 = t.at(x, z, w);
                    const elem l = t.at(y, e1, e2);
                    if (l != t.at(z, e1, e3) || l != t.at(w, e2, e3)) {
                        if (witness) *witness = {Violation::axiom_ii, {x, y, z, w}, 4};
                        return false;
                    }
                }
            }
    return true;
}

AxiomReport validate(const TribracketTable& t) {
    AxiomReport r;
    Violation v;
    r.axiom_i_ok = check_axiom_i(t, &v);
    if (!r.axiom_i_ok) {
        r.first_violation = v;
        r.axiom_ii_ok = check_axiom_ii(t, nullptr);
        return r;
    }
    r.axiom_ii_ok = check_axiom_ii(t, &v);
    if (!r.axiom_ii_ok) r.first_violation = v;
    return r;
}

AxiomReport full_report(const TribracketTable& t) {
    AxiomReport r = validate(t);
    auto w = entropic_failure_parallel(t);
    r.entropic_ok = !w.has_value();
    if (w && !r.first_violation) r.first_violation = w;
    return r;
}

namespace {

// Scans x in [x_lo, x_hi) in lexicographic tuple order; returns the first
// failing tuple within that range.
std::optional<Violation> entropic_scan(const TribracketTable& t, int x_lo, int x_hi) {
    const int n = t.order();
    const elem* T = t.raw();
    const auto row = [&](int i, int j) { return T + (static_cast<std::size_t>(i) * n + j) * n; };
    for (int x = x_lo; x < x_hi; ++x)
        for (int y = 0; y < n; ++y) {
            const elem* rXY = row(x, y);
            for (int z = 0; z < n; ++z) {
                const int l1 = rXY[z];
                for (int u = 0; u < n; ++u) {
                    const elem* rXU = row(x, u);
                    const elem* rUV0 = T + static_cast<std::size_t>(u) * n * n;
                    for (int v = 0; v < n; ++v) {
                        const elem* rUV = rUV0 + static_cast<std::size_t>(v) * n;
                        const elem* rYV = row(y, v);
                        for (int w = 0; w < n; ++w) {
                            const int l2 = rUV[w];
                            const elem* rL = row(l1, l2);
                            const elem* rZW = row(z, w);
                            for (int a = 0; a < n; ++a) {
                                const int r1 = rXU[a];
                                const elem* rAB0 = T + static_cast<std::size_t>(a) * n * n;
                                for (int b = 0; b < n; ++b) {
                                    const int r2 = rYV[b];
                                    const elem* rR = row(r1, r2);
                                    const elem* rAB = rAB0 + static_cast<std::size_t>(b) * n;
                                    for (int c = 0; c < n; ++c) {
                                        if (rL[rAB[c]] != rR[rZW[c]]) {
                                            Violation out;
                                            out.kind = Violation::entropic;
                                            out.tuple = {x, y, z, u, v, w, a, b, c};
                                            out.arity = 9;
                                            return out;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> entropic_failure(const TribracketTable& t) {
    return entropic_scan(t, 0, t.order());
}

std::optional<Violation> entropic_failure_parallel(const TribracketTable& t, int jobs) {
    const int n = t.order();
    if (n < 4) return entropic_scan(t, 0, n);  // not worth forking
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<std::optional<Violation>> found(n);
    bool any = false;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) shared(found, any)
    for (int x = 0; x < n; ++x) {
        bool earlier;
#pragma omp atomic read
        earlier = any;
        // keep scanning larger x only while no smaller-x witness is certain;
        // a coarse check is enough, correctness comes from the min-reduce below
        if (earlier && found[x].has_value()) continue;
        auto w = entropic_scan(t, x, x + 1);
        if (w) {
            found[x] = w;
#pragma omp atomic write
            any = true;
        }
    }
    for (int x = 0; x < n; ++x)
        if (found[x]) return found[x];  // smallest x = lexicographically first tuple
    return std::nullopt;
}

elem divide(const TribracketTable& t, Slot slot, int k1, int k2, int target) {
    const int n = t.order();
    if (k1 < 0 || k2 < 0 || target < 0 || k1 >= n || k2 >= n || target >= n)
        throw usage_error("divide argument out of range for order " + std::to_string(n));
    int hit = -1;
    for (int s = 0; s < n; ++s) {
        elem v = slot == Slot::left   ? t.at(s, k1, k2)
               : slot == Slot::middle ? t.at(k1, s, k2)
                                      : t.at(k1, k2, s);
        if (v == target) {
            if (hit >= 0)
                throw domain_error("not a quasigroup line: two solutions at (" +
                                   std::to_string(k1 + 1) + "," + std::to_string(k2 + 1) + ")");
            hit = s;
        }
    }
    if (hit < 0)
        throw domain_error("not a quasigroup line: no solution at (" + std::to_string(k1 + 1) +
                           "," + std::to_string(k2 + 1) + ")");
    return static_cast<elem>(hit);
}

}  // namespace tribracket
