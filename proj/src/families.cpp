#include "tribracket/families.hpp"

#include <algorithm>
#include <numeric>

namespace tribracket {

GroupTable::GroupTable(int order, std::vector<elem> mul, std::string name)
    : order_(order), mul_(std::move(mul)), name_(std::move(name)) {
    if (order <= 0) throw domain_error("group order must be positive");
    const auto n = static_cast<std::size_t>(order);
    if (mul_.size() != n * n) throw domain_error("group table size mismatch");
    for (elem v : mul_)
        if (v >= order) throw domain_error("group table entry out of range");
    // identity
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw domain_error("group table has no identity element");
    // inverses
    inv_.assign(n, 0);
    for (int a = 0; a < order; ++a) {
        int found = -1;
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) { found = b; break; }
        if (found < 0) throw domain_error("group element without inverse");
        inv_[a] = static_cast<elem>(found);
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw domain_error("group table not associative");
}

bool GroupTable::abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupTable GroupTable::cyclic(int n) {
    if (n <= 0) throw domain_error("cyclic group order must be positive");
    std::vector<elem> m(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m[static_cast<std::size_t>(a) * n + b] = static_cast<elem>((a + b) % n);
    return GroupTable(n, std::move(m), "Z" + std::to_string(n));
}

GroupTable GroupTable::symmetric(int k) {
    if (k < 1 || k > 4) throw domain_error("symmetric group helper supports 1 <= k <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<elem> m(static_cast<std::size_t>(n) * n);
    std::vector<int> comp(k);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
            m[static_cast<std::size_t>(a) * n + b] = static_cast<elem>(index_of(comp));
        }
    return GroupTable(n, std::move(m), "S" + std::to_string(k));
}

GroupTable GroupTable::dihedral(int k) {
    if (k < 1) throw domain_error("dihedral parameter must be positive");
    // elements (r, f): rotation r in Z_k, flip f in {0,1}; index = r + k*f
    const int n = 2 * k;
    std::vector<elem> m(static_cast<std::size_t>(n) * n);
    auto idx = [k](int r, int f) { return r + k * f; };
    for (int r1 = 0; r1 < k; ++r1)
        for (int f1 = 0; f1 < 2; ++f1)
            for (int r2 = 0; r2 < k; ++r2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    int r = f1 ? (r1 - r2 % k + k) % k : (r1 + r2) % k;
                    int f = f1 ^ f2;
                    m[static_cast<std::size_t>(idx(r1, f1)) * n + idx(r2, f2)] =
                        static_cast<elem>(idx(r, f));
                }
    return GroupTable(n, std::move(m), "D" + std::to_string(k));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    const int n = a.order() * b.order();
    if (n > 255) throw domain_error("product group too large");
    std::vector<elem> m(static_cast<std::size_t>(n) * n);
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    m[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        static_cast<elem>(idx(a.mul(x1, x2), b.mul(y1, y2)));
    return GroupTable(n, std::move(m), a.name() + "x" + b.name());
}

GroupTable GroupTable::from_spec(const std::string& spec) {
    auto x = spec.find('x');
    if (x != std::string::npos)
        return direct_product(from_spec(spec.substr(0, x)), from_spec(spec.substr(x + 1)));
    if (spec.size() < 2) throw usage_error("bad group spec: " + spec);
    int n;
    try {
        n = std::stoi(spec.substr(1));
    } catch (const std::exception&) {
        throw usage_error("bad group spec: " + spec);
    }
    switch (spec[0]) {
        case 'Z': case 'z': return cyclic(n);
        case 'S': case 's': return symmetric(n);
        case 'D': case 'd': return dihedral(n);
        default: throw usage_error("bad group spec: " + spec + " (expected Z<n>, S<n>, D<n>)");
    }
}

TribracketTable make_alexander(int n, long s, long t) {
    if (n <= 0) throw domain_error("alexander: order must be positive");
    if (n > 255) throw domain_error("alexander: order too large");
    auto unit = [n](long v) { return std::gcd(((v % n) + n) % n, static_cast<long>(n)) == 1; };
    if (!unit(s)) throw domain_error("alexander: s = " + std::to_string(s) +
                                     " is not a unit mod " + std::to_string(n));
    if (!unit(t)) throw domain_error("alexander: t = " + std::to_string(t) +
                                     " is not a unit mod " + std::to_string(n));
    const long sm = ((s % n) + n) % n, tm = ((t % n) + n) % n;
    std::vector<elem> e(static_cast<std::size_t>(n) * n * n);
    std::size_t i = 0;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z)
                e[i++] = static_cast<elem>(((tm * y + sm * z + (n - tm * sm % n) * x) % n));
    TribracketTable out(n, std::move(e));
    out.set_name("Alex(Z" + std::to_string(n) + "," + std::to_string(s) + "," + std::to_string(t) + ")");
    return out;
}

TribracketTable make_dehn(const GroupTable& g) {
    const int n = g.order();
    std::vector<elem> e(static_cast<std::size_t>(n) * n * n);
    std::size_t i = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                e[i++] = g.mul(g.mul(y, g.inverse(x)), z);
    TribracketTable out(n, std::move(e));
    out.set_name("Dehn(" + g.name() + ")");
    return out;
}

}  // namespace tribracket
