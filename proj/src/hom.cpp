#include "tribracket/hom.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "tribracket/axioms.hpp"
#include "tribracket/idempotents.hpp"

namespace tribracket {

bool is_hom(const Image& f, const TribracketTable& source, const TribracketTable& target) {
    const int n = source.order();
    if (static_cast<int>(f.size()) != n)
        throw usage_error("image array length does not match source order");
    for (elem v : f)
        if (v >= target.order()) throw usage_error("image value out of target range");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (f[source.at(x, y, z)] != target.at(f[x], f[y], f[z])) return false;
    return true;
}

std::vector<Image> enumerate_homs(const TribracketTable& source, const TribracketTable& target) {
    const int n = source.order();
    const int m = target.order();
    if (m == 0) return {};                 // homset into the empty tribracket is empty
    if (n == 0) return {Image{}};          // single empty map
    // constraint (x,y,z) becomes checkable once max(x,y,z,[x,y,z]) is assigned
    struct Triple { elem x, y, z, r; };
    std::vector<std::vector<Triple>> at_step(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const elem r = source.at(x, y, z);
                const int s = std::max({x, y, z, static_cast<int>(r)});
                at_step[s].push_back({static_cast<elem>(x), static_cast<elem>(y),
                                      static_cast<elem>(z), r});
            }
    std::vector<Image> out;
    Image f(n, 0);
    auto consistent = [&](int step) {
        for (const Triple& c : at_step[step])
            if (f[c.r] != target.at(f[c.x], f[c.y], f[c.z])) return false;
        return true;
    };
    // iterative DFS in value order gives lexicographic output order
    int step = 0;
    f[0] = 0;
    while (step >= 0) {
        if (f[step] < m && consistent(step)) {
            if (step + 1 == n) {
                out.push_back(f);
            } else {
                f[++step] = 0;
                continue;
            }
        }
        // advance
        while (step >= 0 && ++f[step] >= m) --step;
    }
    return out;
}

HomsetTribracket homset_tribracket(const TribracketTable& t, const TribracketTable& x) {
    if (!is_entropic(x))
        throw domain_error(
            "homset target is not entropic: the pointwise bracket of homomorphisms "
            "need not be a homomorphism");
    HomsetTribracket out;
    out.legend = enumerate_homs(t, x);
    const int k = static_cast<int>(out.legend.size());
    const int n = t.order();
    std::vector<elem> entries(static_cast<std::size_t>(k) * k * k);
    Image pw(n);
    std::size_t pos = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                const Image &f = out.legend[i], &g = out.legend[j], &h = out.legend[l];
                for (int s = 0; s < n; ++s) pw[s] = x.at(f[s], g[s], h[s]);
                auto it = std::lower_bound(out.legend.begin(), out.legend.end(), pw);
                if (it == out.legend.end() || *it != pw)
                    throw std::logic_error(
                        "homset closure failed: pointwise bracket left the homset");
                entries[pos++] = static_cast<elem>(it - out.legend.begin());
            }
    out.table = TribracketTable(k, std::move(entries));
    return out;
}

TribracketTable relabel(const TribracketTable& t, const std::vector<elem>& perm) {
    const int n = t.order();
    if (static_cast<int>(perm.size()) != n) throw usage_error("permutation length mismatch");
    std::vector<elem> e(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                e[(static_cast<std::size_t>(perm[x]) * n + perm[y]) * n + perm[z]] =
                    perm[t.at(x, y, z)];
    return TribracketTable(n, std::move(e));
}

namespace {

// Compares the relabelling of t by (p, q=p^{-1}) against best, flattened
// lexicographically; replaces best if smaller. p maps new -> old.
void consider(const TribracketTable& t, const std::vector<elem>& p, std::vector<elem>& q,
              std::vector<elem>& best) {
    const int n = t.order();
    for (int i = 0; i < n; ++i) q[p[i]] = static_cast<elem>(i);
    std::size_t pos = 0;
    int verdict = 0;  // -1 smaller, +1 larger
    for (int i = 0; i < n && verdict == 0; ++i)
        for (int j = 0; j < n && verdict == 0; ++j)
            for (int k = 0; k < n; ++k) {
                const elem v = q[t.at(p[i], p[j], p[k])];
                if (v != best[pos]) { verdict = v < best[pos] ? -1 : 1; break; }
                ++pos;
            }
    if (verdict != -1) return;
    // rebuild fully
    pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) best[pos++] = q[t.at(p[i], p[j], p[k])];
}

std::vector<elem> canonical_entries(const TribracketTable& t, int first_new_of_old,
                                    std::vector<elem> seed) {
    // permutations p (new->old) with p[?]=... restricted so that old element
    // `first_new_of_old` is p[0]'s... — see canonical_form_parallel: we fix p[0].
    const int n = t.order();
    std::vector<elem> best = std::move(seed);
    std::vector<elem> p(n), q(n);
    std::vector<elem> rest;
    for (int v = 0; v < n; ++v)
        if (v != first_new_of_old) rest.push_back(static_cast<elem>(v));
    do {
        p[0] = static_cast<elem>(first_new_of_old);
        std::copy(rest.begin(), rest.end(), p.begin() + 1);
        consider(t, p, q, best);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

}  // namespace

TribracketTable canonical_form(const TribracketTable& t, int max_order) {
    const int n = t.order();
    if (n > max_order)
        throw usage_error("canonical form order " + std::to_string(n) + " above bound " +
                          std::to_string(max_order) + "; raise the bound to proceed");
    if (n == 0) return t;
    std::vector<elem> best(static_cast<std::size_t>(n) * n * n, static_cast<elem>(n - 1));
    std::vector<elem> p(n), q(n);
    std::iota(p.begin(), p.end(), 0);
    // seed best with the identity relabelling, then scan all permutations
    for (int i = 0; i < n; ++i) q[i] = static_cast<elem>(i);
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) best[pos++] = t.at(i, j, k);
    while (std::next_permutation(p.begin(), p.end())) consider(t, p, q, best);
    return TribracketTable(n, std::move(best));
}

TribracketTable canonical_form_parallel(const TribracketTable& t, int max_order, int jobs) {
    const int n = t.order();
    if (n > max_order)
        throw usage_error("canonical form order " + std::to_string(n) + " above bound " +
                          std::to_string(max_order) + "; raise the bound to proceed");
    if (n <= 6) return canonical_form(t, max_order);  // forking overhead dominates
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<std::vector<elem>> results(n);
    std::vector<elem> worst(static_cast<std::size_t>(n) * n * n, static_cast<elem>(n - 1));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int v = 0; v < n; ++v) results[v] = canonical_entries(t, v, worst);
    std::vector<elem> best = results[0];
    for (int v = 1; v < n; ++v) best = std::min(best, results[v]);
    return TribracketTable(n, std::move(best));
}

namespace {

// conjugation-invariant profile of the diagonal map x -> [x,x,x]
std::vector<int> diagonal_profile(const TribracketTable& t) {
    const int n = t.order();
    std::vector<int> indeg(n, 0);
    for (int x = 0; x < n; ++x) ++indeg[t.at(x, x, x)];
    std::sort(indeg.begin(), indeg.end());
    return indeg;
}

bool extend_iso(const TribracketTable& a, const TribracketTable& b, std::vector<elem>& p,
                std::vector<char>& used, int depth) {
    const int n = a.order();
    if (depth == n) return true;
    for (int img = 0; img < n; ++img) {
        if (used[img]) continue;
        p[depth] = static_cast<elem>(img);
        used[img] = 1;
        bool ok = true;
        // every triple over assigned elements whose bracket is also assigned
        for (int x = 0; x <= depth && ok; ++x)
            for (int y = 0; y <= depth && ok; ++y)
                for (int z = 0; z <= depth && ok; ++z) {
                    if (x != depth && y != depth && z != depth) continue;
                    const elem r = a.at(x, y, z);
                    if (r <= depth)
                        ok = b.at(p[x], p[y], p[z]) == p[r];
                }
        // previously deferred triples whose bracket just became assigned
        for (int x = 0; x < depth && ok; ++x)
            for (int y = 0; y < depth && ok; ++y)
                for (int z = 0; z < depth && ok; ++z)
                    if (a.at(x, y, z) == depth) ok = b.at(p[x], p[y], p[z]) == p[depth];
        if (ok && extend_iso(a, b, p, used, depth + 1)) return true;
        used[img] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<elem>> are_isomorphic(const TribracketTable& a,
                                                const TribracketTable& b) {
    if (a.order() != b.order()) return std::nullopt;
    const int n = a.order();
    if (n == 0) return std::vector<elem>{};
    if (idempotent_number(a) != idempotent_number(b)) return std::nullopt;
    if (diagonal_profile(a) != diagonal_profile(b)) return std::nullopt;
    std::vector<elem> p(n, 0);
    std::vector<char> used(n, 0);
    if (extend_iso(a, b, p, used, 0)) return p;
    return std::nullopt;
}

}  // namespace tribracket
