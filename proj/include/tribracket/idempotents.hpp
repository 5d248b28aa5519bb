#pragma once

#include <vector>

#include "tribracket/table.hpp"

namespace tribracket {

/// Elements x with [x,x,x] = x, ascending.
std::vector<elem> idempotent_elements(const TribracketTable& t);

int idempotent_number(const TribracketTable& t);

/// A relabelled subtable together with the original elements its indices
/// stand for (legend[i] = original element of new index i, ascending).
struct SubTable {
    TribracketTable table;
    std::vector<elem> legend;
};

/// Smallest superset of seed closed under the bracket, relabelled to
/// {0..k-1}. For finite tables closure under the operation forces closure
/// under all three divisions, since the translation maps restrict to
/// bijections of a closed finite subset. Empty seed yields the empty table.
SubTable subtribracket_closure(const TribracketTable& t, std::vector<elem> seed);

/// Subtribracket generated by the idempotent elements.
SubTable idem_subtribracket(const TribracketTable& t);

}  // namespace tribracket
