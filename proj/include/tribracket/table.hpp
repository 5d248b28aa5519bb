#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tribracket {

// Thrown for malformed input: bad file syntax, out-of-range arguments,
// unknown names. CLI maps this to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for well-formed input that violates a mathematical precondition
// (table fails an axiom, non-entropic coloring target, non-unit parameter).
// CLI maps this to exit code 1.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using elem = std::uint8_t;

/// Finite ternary operation table: the operation 3-tensor of a candidate
/// tribracket on {0..n-1}. Entry (x,y,z) is the value of the bracket
/// [x,y,z]. Order 0 (the empty tribracket) is a valid table.
///
/// Internally 0-based; the text format and all printed output are 1-based.
class TribracketTable {
public:
    TribracketTable() = default;  // the empty tribracket
    TribracketTable(int order, std::vector<elem> entries, std::string name = "");

    int order() const { return order_; }
    bool empty() const { return order_ == 0; }

    // unchecked lookup
    elem at(int x, int y, int z) const {
        return entries_[(static_cast<std::size_t>(x) * order_ + y) * order_ + z];
    }
    // range-checked lookup; throws usage_error
    elem bracket(int x, int y, int z) const;

    const std::vector<elem>& data() const { return entries_; }
    const elem* raw() const { return entries_.data(); }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// Tensor text format. Line 1 is the order n; then n blocks separated by
    /// exactly one blank line; block x has n lines of n space-separated
    /// 1-based entries, line y column z holding [x,y,z]. Order 0 is the
    /// single line "0".
    std::string to_text() const;
    static TribracketTable from_text(std::istream& in);
    static TribracketTable from_file(const std::string& path);

    friend bool operator==(const TribracketTable& a, const TribracketTable& b) {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const TribracketTable& a, const TribracketTable& b) {
        return !(a == b);
    }
    // lexicographic on (order, flattened entries); used for deterministic sorting
    friend bool operator<(const TribracketTable& a, const TribracketTable& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        return a.entries_ < b.entries_;
    }

private:
    int order_ = 0;
    std::vector<elem> entries_;
    std::string name_;
};

}  // namespace tribracket
