#include "tribracket/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tribracket/axioms.hpp"
#include "tribracket/hom.hpp"

namespace tribracket {

namespace {

// Depth-first search over tensor cells in lexicographic order with
// three-directional Latin masks. Axiom (ii) instances are watched: an
// instance fires once its three base cells (x,y,z),(x,y,w),(x,z,w) are
// filled; if one of the value-dependent cells it must read is still open,
// the instance parks in the pending bucket of that cell's step and is
// re-examined when the search reaches it.
class Search {
public:
    Search(int n, Filter filter) : n_(n), filter_(filter) {
        const int nn = n * n;
        cells_ = nn * n;
        val_.assign(cells_, 0);
        maskXY_.assign(nn, 0);
        maskXZ_.assign(nn, 0);
        maskYZ_.assign(nn, 0);
        pending_.assign(cells_, {});
        added_.assign(cells_, {});
        // static trigger lists: instance (x,y,z,w) fires when the latest of
        // its base cells is filled
        trigger_.assign(cells_, {});
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int w = 0; w < n; ++w) {
                        const int s = std::max({step(x, y, z), step(x, y, w), step(x, z, w)});
                        trigger_[s].push_back(pack(x, y, z, w));
                    }
    }

    // run the full search, emitting every completed table
    void run(const std::function<void(const TribracketTable&)>& emit) {
        emit_ = &emit;
        if (n_ == 0) {
            (*emit_)(TribracketTable());
            return;
        }
        descend(0);
    }

    // run only below a fixed prefix of cell values (replayed first);
    // returns false if the prefix itself is inconsistent
    bool run_prefix(const std::vector<elem>& prefix,
                    const std::function<void(const TribracketTable&)>& emit) {
        emit_ = &emit;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!place(static_cast<int>(i), prefix[i])) {
                for (int j = static_cast<int>(i); j >= 0; --j) remove(j);
                return false;
            }
        }
        descend(static_cast<int>(prefix.size()));
        for (int j = static_cast<int>(prefix.size()) - 1; j >= 0; --j) remove(j);
        return true;
    }

    // enumerate consistent prefixes of the given length (for work splitting)
    std::vector<std::vector<elem>> prefixes(int len) {
        std::vector<std::vector<elem>> out;
        std::vector<elem> cur;
        prefix_descend(0, len, cur, out);
        return out;
    }

private:
    int step(int x, int y, int z) const { return (x * n_ + y) * n_ + z; }
    std::uint32_t pack(int x, int y, int z, int w) const {
        return static_cast<std::uint32_t>(((x * n_ + y) * n_ + z) * n_ + w);
    }

    bool latin_ok(int s, elem v) const {
        const int z = s % n_, xy = s / n_;
        const int y = xy % n_, x = xy / n_;
        const std::uint32_t bit = 1u << v;
        return !((maskXY_[xy] | maskXZ_[x * n_ + z] | maskYZ_[y * n_ + z]) & bit);
    }

    void set_masks(int s, elem v, bool on) {
        const int z = s % n_, xy = s / n_;
        const int y = xy % n_, x = xy / n_;
        const std::uint32_t bit = 1u << v;
        if (on) {
            maskXY_[xy] |= bit;
            maskXZ_[x * n_ + z] |= bit;
            maskYZ_[y * n_ + z] |= bit;
        } else {
            maskXY_[xy] &= ~bit;
            maskXZ_[x * n_ + z] &= ~bit;
            maskYZ_[y * n_ + z] &= ~bit;
        }
    }

    // evaluate instance once its base cells are known; returns false on a
    // definite violation, otherwise parks it if some derived cell is open
    bool fire(std::uint32_t inst, int now) {
        int w = inst % n_;
        int rest = inst / n_;
        int z = rest % n_;
        rest /= n_;
        int y = rest % n_;
        int x = rest / n_;
        const elem e1 = val_[step(x, y, z)];
        const elem e2 = val_[step(x, y, w)];
        const elem e3 = val_[step(x, z, w)];
        const int d1 = step(y, e1, e2), d2 = step(z, e1, e3), d3 = step(w, e2, e3);
        const int m = std::max({d1, d2, d3});
        if (m > now) {
            pending_[m].push_back(inst);
            added_[now].push_back(m);
            return true;
        }
        const elem l = val_[d1];
        return l == val_[d2] && l == val_[d3];
    }

    bool place(int s, elem v) {
        if (!latin_ok(s, v)) return false;
        val_[s] = v;
        set_masks(s, v, true);
        added_[s].clear();
        for (std::uint32_t inst : trigger_[s])
            if (!fire(inst, s)) { unpark(s); set_masks(s, v, false); return false; }
        for (std::uint32_t inst : pending_[s])
            if (!fire(inst, s)) { unpark(s); set_masks(s, v, false); return false; }
        return true;
    }

    void unpark(int s) {
        for (auto it = added_[s].rbegin(); it != added_[s].rend(); ++it)
            pending_[*it].pop_back();
        added_[s].clear();
    }

    void remove(int s) {
        unpark(s);
        set_masks(s, val_[s], false);
    }

    void leaf() {
        TribracketTable t(n_, val_);
        // re-verify the completed tensor before emitting
        if (!check_axiom_ii(t)) return;
        if (filter_ == Filter::entropic_only && !is_entropic(t)) return;
        (*emit_)(t);
    }

    void descend(int s) {
        if (s == cells_) { leaf(); return; }
        for (int v = 0; v < n_; ++v) {
            if (!place(s, static_cast<elem>(v))) continue;
            descend(s + 1);
            remove(s);
        }
    }

    void prefix_descend(int s, int len, std::vector<elem>& cur,
                        std::vector<std::vector<elem>>& out) {
        if (s == len) { out.push_back(cur); return; }
        for (int v = 0; v < n_; ++v) {
            if (!place(s, static_cast<elem>(v))) continue;
            cur.push_back(static_cast<elem>(v));
            prefix_descend(s + 1, len, cur, out);
            cur.pop_back();
            remove(s);
        }
    }

    int n_, cells_;
    Filter filter_;
    std::vector<elem> val_;
    std::vector<std::uint32_t> maskXY_, maskXZ_, maskYZ_;
    std::vector<std::vector<std::uint32_t>> trigger_, pending_;
    std::vector<std::vector<int>> added_;
    const std::function<void(const TribracketTable&)>* emit_ = nullptr;
};

}  // namespace

std::vector<TribracketTable> enumerate_tribrackets_serial(int n, Filter filter) {
    if (n < 0) throw usage_error("order must be non-negative");
    if (n > 16) throw usage_error("enumeration supports orders up to 16");
    std::vector<TribracketTable> out;
    Search s(n, filter);
    s.run([&](const TribracketTable& t) { out.push_back(t); });
    return out;
}

std::vector<TribracketTable> enumerate_tribrackets(int n, Filter filter, int jobs) {
    if (n < 0) throw usage_error("order must be non-negative");
    if (n > 16) throw usage_error("enumeration supports orders up to 16");
    if (n <= 2) return enumerate_tribrackets_serial(n, filter);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    // split on the first row of the first layer
    std::vector<std::vector<elem>> pre;
    {
        Search s(n, filter);
        pre = s.prefixes(n);
    }
    std::vector<std::vector<TribracketTable>> parts(pre.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < pre.size(); ++i) {
        Search s(n, filter);
        s.run_prefix(pre[i], [&](const TribracketTable& t) { parts[i].push_back(t); });
    }
    std::vector<TribracketTable> out;
    for (auto& p : parts)
        for (auto& t : p) out.push_back(std::move(t));
    return out;
}

std::vector<TribracketTable> classify(int n, Filter filter, int jobs, int max_order) {
    if (n > max_order)
        throw usage_error("classification order above canonical-form bound " +
                          std::to_string(max_order));
    auto raw = enumerate_tribrackets(n, filter, jobs);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<TribracketTable> canon(raw.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::size_t i = 0; i < raw.size(); ++i) canon[i] = canonical_form(raw[i], max_order);
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    return canon;
}

void write_census(std::ostream& out, const std::vector<TribracketTable>& tables,
                  const std::string& order_label, Filter filter) {
    out << "order=" << order_label << " classes=" << tables.size() << " filter="
        << (filter == Filter::all ? "all" : "entropic_only") << '\n';
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i > 0) out << "---\n";
        out << tables[i].to_text();
    }
}

std::vector<TribracketTable> read_census(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("order=", 0) != 0)
        throw usage_error("census: missing 'order=' header line");
    std::size_t klass = header.find("classes=");
    if (klass == std::string::npos) throw usage_error("census: header lacks classes=");
    const long expected = std::stol(header.substr(klass + 8));
    std::vector<TribracketTable> out;
    std::string chunk;
    std::string line;
    auto flush = [&]() {
        std::istringstream s(chunk);
        if (chunk.find_first_not_of(" \t\r\n") != std::string::npos)
            out.push_back(TribracketTable::from_text(s));
        chunk.clear();
    };
    while (std::getline(in, line)) {
        if (line.rfind("---", 0) == 0) flush();
        else chunk += line + '\n';
    }
    flush();
    if (expected != static_cast<long>(out.size()))
        throw usage_error("census: header claims " + std::to_string(expected) +
                          " classes, file holds " + std::to_string(out.size()));
    return out;
}

ProductTable product_table(const std::vector<TribracketTable>& classes, int max_order) {
    ProductTable out;
    std::map<int, int> used_per_order;
    std::vector<TribracketTable> canon;  // canonical form per input class
    for (const auto& c : classes) {
        auto rep = validate(c);
        if (!rep.axiom_i_ok || !rep.axiom_ii_ok)
            throw domain_error("product table input is not a valid tribracket");
        if (!is_entropic(c)) throw domain_error("product table input is not entropic");
        canon.push_back(canonical_form_parallel(c, max_order));
        out.labels.push_back("T" + std::to_string(c.order()) + "_" +
                             std::to_string(++used_per_order[c.order()]));
    }
    std::vector<std::pair<std::string, TribracketTable>> known;  // label -> canonical
    for (std::size_t i = 0; i < classes.size(); ++i) known.emplace_back(out.labels[i], canon[i]);
    out.cell.assign(classes.size(), std::vector<std::string>(classes.size()));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j) {
            auto h = homset_tribracket(classes[i], classes[j]);
            auto c = canonical_form_parallel(h.table, std::max(max_order, h.table.order()));
            std::string label;
            for (const auto& [lab, tab] : known)
                if (tab == c) { label = lab; break; }
            if (label.empty()) {
                label = "T" + std::to_string(c.order()) + "_" +
                        std::to_string(++used_per_order[c.order()]);
                known.emplace_back(label, c);
                out.discovered.emplace_back(label, c);
            }
            out.cell[i][j] = label;
        }
    return out;
}

}  // namespace tribracket
