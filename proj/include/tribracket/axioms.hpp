#pragma once

#include <array>
#include <optional>
#include <string>

#include "tribracket/table.hpp"

namespace tribracket {

/// Witness of a failed check: the offending element tuple (0-based).
/// axiom_i:  (direction, line coordinate 1, line coordinate 2) where
///           direction 0/1/2 fixes (x,y)/(x,z)/(y,z) and the repeated value.
/// axiom_ii: the tuple (x,y,z,w).
/// entropic: the tuple (x,y,z,u,v,w,a,b,c).
struct Violation {
    enum Kind { axiom_i, axiom_ii, entropic };
    Kind kind;
    std::array<int, 9> tuple{};
    int arity = 0;
    std::string describe() const;  // 1-based rendering
};

struct AxiomReport {
    bool axiom_i_ok = false;
    bool axiom_ii_ok = false;
    std::optional<bool> entropic_ok;
    std::optional<Violation> first_violation;
};

bool check_axiom_i(const TribracketTable& t, Violation* witness = nullptr);
bool check_axiom_ii(const TribracketTable& t, Violation* witness = nullptr);

/// Axioms (i) and (ii); entropic_ok is left unset.
AxiomReport validate(const TribracketTable& t);
/// Axioms plus the entropic condition (n^9 scan).
AxiomReport full_report(const TribracketTable& t);

inline bool is_valid(const TribracketTable& t) {
    auto r = validate(t);
    return r.axiom_i_ok && r.axiom_ii_ok;
}

/// Lexicographically first failing 9-tuple of the entropic identity, if any.
/// Serial reference implementation.
std::optional<Violation> entropic_failure(const TribracketTable& t);
/// OpenMP variant; returns the identical witness. jobs <= 0 means all cores.
std::optional<Violation> entropic_failure_parallel(const TribracketTable& t, int jobs = 0);

inline bool is_entropic(const TribracketTable& t) { return !entropic_failure(t); }

enum class Slot { left, middle, right };

/// Unique division in the given slot:
///   left:   solve [a, k1, k2] = target for a
///   middle: solve [k1, b, k2] = target for b
///   right:  solve [k1, k2, c] = target for c
/// Throws domain_error when the relevant line is not a bijection.
elem divide(const TribracketTable& t, Slot slot, int k1, int k2, int target);

}  // namespace tribracket
