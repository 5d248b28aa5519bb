#pragma once

#include <string>
#include <vector>

#include "tribracket/table.hpp"

namespace tribracket {

/// Finite group given by its multiplication table. The constructor checks the
/// group laws (associativity, identity, inverses) and throws domain_error
/// otherwise.
class GroupTable {
public:
    GroupTable(int order, std::vector<elem> mul, std::string name = "");

    int order() const { return order_; }
    elem mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    elem inverse(int a) const { return inv_[a]; }
    int identity() const { return identity_; }
    bool abelian() const;
    const std::string& name() const { return name_; }

    static GroupTable cyclic(int n);
    static GroupTable symmetric(int k);  // k <= 4
    static GroupTable dihedral(int k);   // order 2k, k >= 1
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

    /// "Z6", "S3", "D4", and x-products like "Z2xZ2".
    static GroupTable from_spec(const std::string& spec);

private:
    int order_;
    std::vector<elem> mul_;
    std::vector<elem> inv_;
    int identity_ = -1;
    std::string name_;
};

/// Alexander tribracket on Z_n: [x,y,z] = t*y + s*z - t*s*x (mod n).
/// s and t must be units mod n.
TribracketTable make_alexander(int n, long s, long t);

/// Dehn tribracket of a group: [x,y,z] = y * x^{-1} * z.
TribracketTable make_dehn(const GroupTable& g);

}  // namespace tribracket
