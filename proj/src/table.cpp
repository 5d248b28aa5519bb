#include "tribracket/table.hpp"

#include <fstream>
#include <sstream>

namespace tribracket {

TribracketTable::TribracketTable(int order, std::vector<elem> entries, std::string name)
    : order_(order), entries_(std::move(entries)), name_(std::move(name)) {
    if (order < 0) throw usage_error("table order must be non-negative");
    const auto n = static_cast<std::size_t>(order);
    if (entries_.size() != n * n * n)
        throw usage_error("entry count " + std::to_string(entries_.size()) +
                          " does not match order " + std::to_string(order));
    for (elem v : entries_)
        if (v >= order)
            throw usage_error("entry value " + std::to_string(v + 1) +
                              " out of range for order " + std::to_string(order));
}

elem TribracketTable::bracket(int x, int y, int z) const {
    if (x < 0 || y < 0 || z < 0 || x >= order_ || y >= order_ || z >= order_)
        throw usage_error("bracket argument out of range for order " + std::to_string(order_));
    return at(x, y, z);
}

std::string TribracketTable::to_text() const {
    std::ostringstream out;
    out << order_ << '\n';
    for (int x = 0; x < order_; ++x) {
        if (x > 0) out << '\n';
        for (int y = 0; y < order_; ++y) {
            for (int z = 0; z < order_; ++z) {
                if (z > 0) out << ' ';
                out << int(at(x, y, z)) + 1;
            }
            out << '\n';
        }
    }
    return out.str();
}

TribracketTable TribracketTable::from_text(std::istream& in) {
    long long n;
    if (!(in >> n)) throw usage_error("tensor: missing order line");
    if (n < 0) throw usage_error("tensor: negative order");
    if (n > 255) throw usage_error("tensor: order too large (max 255)");
    std::vector<elem> entries;
    entries.reserve(static_cast<std::size_t>(n) * n * n);
    for (long long i = 0; i < n * n * n; ++i) {
        long long v;
        if (!(in >> v))
            throw usage_error("tensor: expected " + std::to_string(n * n * n) +
                              " entries, got " + std::to_string(i));
        if (v < 1 || v > n)
            throw usage_error("tensor: entry " + std::to_string(v) +
                              " out of range 1.." + std::to_string(n));
        entries.push_back(static_cast<elem>(v - 1));
    }
    return TribracketTable(static_cast<int>(n), std::move(entries));
}

TribracketTable TribracketTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open tensor file: " + path);
    TribracketTable t = from_text(in);
    // derive a name from the file stem
    auto slash = path.find_last_of("/\\");
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = stem.rfind('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    t.set_name(stem);
    return t;
}

}  // namespace tribracket
