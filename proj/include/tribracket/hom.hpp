#pragma once

#include <optional>
#include <vector>

#include "tribracket/table.hpp"

namespace tribracket {

/// A homomorphism source -> target stored as its image array:
/// image[x] = f(x). The defining identity is
/// f([x,y,z]) = [f(x),f(y),f(z)] for all triples.
using Image = std::vector<elem>;

bool is_hom(const Image& f, const TribracketTable& source, const TribracketTable& target);

/// All homomorphisms source -> target, sorted lexicographically by image
/// array. Complete and duplicate-free (depth-first assignment with pruning
/// on every triple whose operands are decided).
///
/// The homset into the empty table is taken to be empty for every source,
/// and the homset from the empty table to a nonempty one is the single
/// empty map, matching the conventions of the product table.
std::vector<Image> enumerate_homs(const TribracketTable& source, const TribracketTable& target);

struct HomsetTribracket {
    TribracketTable table;      // order = |Hom(T,X)|
    std::vector<Image> legend;  // index-aligned with table elements
};

/// The pointwise-bracket tribracket on Hom(T,X). X must be entropic
/// (domain_error otherwise); if a pointwise bracket of homomorphisms ever
/// fails to be a homomorphism the construction aborts with std::logic_error,
/// since that would contradict the closure property the structure rests on.
HomsetTribracket homset_tribracket(const TribracketTable& t, const TribracketTable& x);

/// Simultaneous relabelling by a permutation: result[p(x),p(y),p(z)] = p(t[x,y,z]).
TribracketTable relabel(const TribracketTable& t, const std::vector<elem>& perm);

/// Lexicographically smallest tensor among all n! relabellings. Equal
/// canonical forms characterize isomorphism. Throws usage_error above
/// max_order (n! blowup guard).
TribracketTable canonical_form(const TribracketTable& t, int max_order = 10);
TribracketTable canonical_form_parallel(const TribracketTable& t, int max_order = 10,
                                        int jobs = 0);

/// A permutation p with relabel(a, p) == b, if the tables are isomorphic.
std::optional<std::vector<elem>> are_isomorphic(const TribracketTable& a,
                                                const TribracketTable& b);

}  // namespace tribracket
