#include "tribracket/idempotents.hpp"

#include <algorithm>

namespace tribracket {

std::vector<elem> idempotent_elements(const TribracketTable& t) {
    std::vector<elem> out;
    for (int x = 0; x < t.order(); ++x)
        if (t.at(x, x, x) == x) out.push_back(static_cast<elem>(x));
    return out;
}

int idempotent_number(const TribracketTable& t) {
    return static_cast<int>(idempotent_elements(t).size());
}

SubTable subtribracket_closure(const TribracketTable& t, std::vector<elem> seed) {
    const int n = t.order();
    std::vector<char> in(n, 0);
    for (elem s : seed) {
        if (s >= n) throw usage_error("closure seed element out of range");
        in[s] = 1;
    }
    // iterate to a fixed point; n is small
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x) {
            if (!in[x]) continue;
            for (int y = 0; y < n; ++y) {
                if (!in[y]) continue;
                for (int z = 0; z < n; ++z) {
                    if (!in[z]) continue;
                    elem v = t.at(x, y, z);
                    if (!in[v]) { in[v] = 1; grew = true; }
                }
            }
        }
    }
    std::vector<elem> legend;
    for (int x = 0; x < n; ++x)
        if (in[x]) legend.push_back(static_cast<elem>(x));
    std::vector<elem> back(n, 0);
    for (std::size_t i = 0; i < legend.size(); ++i) back[legend[i]] = static_cast<elem>(i);
    const int k = static_cast<int>(legend.size());
    std::vector<elem> entries(static_cast<std::size_t>(k) * k * k);
    std::size_t i = 0;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z)
                entries[i++] = back[t.at(legend[x], legend[y], legend[z])];
    return {TribracketTable(k, std::move(entries)), std::move(legend)};
}

SubTable idem_subtribracket(const TribracketTable& t) {
    return subtribracket_closure(t, idempotent_elements(t));
}

}  // namespace tribracket
