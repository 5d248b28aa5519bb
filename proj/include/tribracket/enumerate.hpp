#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tribracket/table.hpp"

namespace tribracket {

enum class Filter { all, entropic_only };

/// Every tribracket table of order n, raw (not up to isomorphism), in
/// lexicographic order of the flattened tensor. Depth-first cell filling in
/// layer/row-major order under three-directional Latin masks; each axiom (ii)
/// instance is checked as soon as its last operand (base cell or derived
/// cell) is filled. The entropic filter runs at the leaves: axiom (ii)
/// pruning makes surviving leaves rare enough that the n^9 post-check is
/// cheap (validated against the brute-force oracle at small orders).
std::vector<TribracketTable> enumerate_tribrackets_serial(int n, Filter filter);

/// Same list, search distributed over first-row prefixes. jobs <= 0: all cores.
std::vector<TribracketTable> enumerate_tribrackets(int n, Filter filter, int jobs = 0);

/// Isomorphism-class representatives: canonical forms, sorted, deduplicated.
std::vector<TribracketTable> classify(int n, Filter filter, int jobs = 0, int max_order = 10);

/// Census text: header line "order=<n> classes=<k> filter=<all|entropic_only>"
/// then tensors separated by "---" lines. order may be the word "mixed".
void write_census(std::ostream& out, const std::vector<TribracketTable>& tables,
                  const std::string& order_label, Filter filter);
std::vector<TribracketTable> read_census(std::istream& in);

/// Homset product table over a census. Entry (i,j) is the label of the
/// isomorphism class of Hom(classes[i], classes[j]). Input classes are
/// labelled T<order>_<k> by position (k counts within each order); new
/// classes discovered while filling the table (row-major) get the next free
/// label for their order and are appended to `discovered`.
struct ProductTable {
    std::vector<std::string> labels;                  // per input class
    std::vector<std::vector<std::string>> cell;       // labels[i] x labels[j]
    std::vector<std::pair<std::string, TribracketTable>> discovered;
};
ProductTable product_table(const std::vector<TribracketTable>& classes, int max_order = 10);

}  // namespace tribracket
