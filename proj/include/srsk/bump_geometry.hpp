#pragma once

// Geometry of bump traces: for each node of the grown diagram (plus its
// addable nodes), which bump most recently passed strictly to its left
// in its row, or strictly above in its column. Comparing the two
// indices splits the diagram into a northeast and a southwest region,
// which is where any immediately following insertion must land.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "srsk/insertion.hpp"

namespace srsk {

// 1-based index of the last bump in v's row strictly left of v; 0 if none.
template <LetterKind L>
int nearest_bumped_left(const InsertionTrace<L>& trace, Node v) {
    int best = 0;
    for (std::size_t j = 0; j < trace.bumped_nodes.size(); ++j) {
        const Node b = trace.bumped_nodes[j];
        if (b.row == v.row && b.col < v.col) best = static_cast<int>(j) + 1;
    }
    return best;
}

// 1-based index of the last bump in v's column strictly above v; 0 if none.
template <LetterKind L>
int nearest_bumped_above(const InsertionTrace<L>& trace, Node v) {
    int best = 0;
    for (std::size_t j = 0; j < trace.bumped_nodes.size(); ++j) {
        const Node b = trace.bumped_nodes[j];
        if (b.col == v.col && b.row < v.row) best = static_cast<int>(j) + 1;
    }
    return best;
}

struct NeSwPartition {
    std::vector<Node> universe;  // grown diagram plus its addable nodes, row-major
    std::vector<Node> northeast; // last bump nearby was a row move
    std::vector<Node> southwest; // last bump nearby was a column move

    static bool member(const std::vector<Node>& v, Node u) {
        return std::binary_search(v.begin(), v.end(), u, RowMajorLess{});
    }
    bool in_northeast(Node u) const { return member(northeast, u); }
    bool in_southwest(Node u) const { return member(southwest, u); }
};

// Classify every node of the post-insertion diagram (with addables).
// Nodes untouched on both sides default by the kind of the very first
// scan: a row-first insertion leaves them southwest, a column-first one
// northeast.
template <LetterKind L>
NeSwPartition ne_sw_partition(const Tableau<L>& t, Parity eps, const L& y) {
    const auto ins = epsilon_insert(t, eps, y);
    NeSwPartition part;
    part.universe = diagram_with_addable(ins.tableau.shape());
    for (Node v : part.universe) {
        const int l = nearest_bumped_left(ins.trace, v);
        const int u = nearest_bumped_above(ins.trace, v);
        if (l == 0 && u == 0) {
            if (is_odd(eps + parity_of(y)))
                part.northeast.push_back(v);
            else
                part.southwest.push_back(v);
        } else if (l > u) {
            part.northeast.push_back(v);
        } else if (u > l) {
            part.southwest.push_back(v);
        } else {
            // The walk never bumps the same row (or column) twice at
            // matching positions, so equal nonzero indices can't occur.
            throw std::logic_error("ne_sw_partition: equal nonzero line indices");
        }
    }
    return part;
}

// Whether a biconditional in both directions holds: inserting y then z
// keeps the second walk entirely northeast of the first exactly when
// (z follows y in the twisted order and eps is even), or (z precedes y
// and eps is odd), or (y == z with y even); the southwest version swaps
// the twisted-order clauses and takes y == z odd.
template <LetterKind L>
bool check_node_containment(const Tableau<L>& t, Parity eps, const L& y, const L& z) {
    const auto part = ne_sw_partition(t, eps, y);
    const auto after_y = epsilon_insert(t, eps, y);
    const auto after_z = epsilon_insert(after_y.tableau, eps, z);

    bool all_ne = true, all_sw = true;
    for (Node b : after_z.trace.bumped_nodes) {
        all_ne = all_ne && part.in_northeast(b);
        all_sw = all_sw && part.in_southwest(b);
    }
    const bool want_ne = (prec_less(y, z) && is_even(eps)) || (prec_less(z, y) && is_odd(eps)) ||
                         (y == z && is_even(parity_of(y)));
    const bool want_sw = (prec_less(z, y) && is_even(eps)) || (prec_less(y, z) && is_odd(eps)) ||
                         (y == z && is_odd(parity_of(y)));
    return all_ne == want_ne && all_sw == want_sw;
}

// The added node of the z-insertion sits weakly northeast of the added
// node of the y-insertion exactly under the northeast condition above.
template <LetterKind L>
bool check_added_node_order(const Tableau<L>& t, Parity eps, const L& y, const L& z) {
    const auto after_y = epsilon_insert(t, eps, y);
    const auto after_z = epsilon_insert(after_y.tableau, eps, z);
    const bool ne_holds = northeast(after_y.trace.added_node(), after_z.trace.added_node());
    const bool want = (prec_less(y, z) && is_even(eps)) || (prec_less(z, y) && is_odd(eps)) ||
                      (y == z && is_even(parity_of(y)));
    return ne_holds == want;
}

} // namespace srsk
