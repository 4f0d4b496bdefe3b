#pragma once

// Nodes of a Young diagram (1-indexed row/column) and the arrow
// relations between them. An arrow names the direction of v as seen
// from u: u -> "northeast" v means v sits weakly above and weakly to
// the right of u.

#include <string>

#include "srsk/alphabet.hpp"

namespace srsk {

struct Node {
    int row = 0;
    int col = 0;

    friend constexpr bool operator==(const Node&, const Node&) = default;
};

// (row, col) -> (col, row).
constexpr Node transpose(Node u) { return Node{u.col, u.row}; }

// Coordinate selector: even picks the row, odd picks the column.
constexpr int coord(Node u, Parity eps) { return is_even(eps) ? u.row : u.col; }

// Same column, v weakly above / strictly above.
constexpr bool up(Node u, Node v) { return u.col == v.col && u.row >= v.row; }
constexpr bool strictly_up(Node u, Node v) { return u.col == v.col && u.row > v.row; }

// Same row, v weakly right / strictly right.
constexpr bool right(Node u, Node v) { return u.row == v.row && u.col <= v.col; }
constexpr bool strictly_right(Node u, Node v) { return u.row == v.row && u.col < v.col; }

// Same column, v weakly below / strictly below.
constexpr bool down(Node u, Node v) { return u.col == v.col && u.row <= v.row; }
constexpr bool strictly_down(Node u, Node v) { return u.col == v.col && u.row < v.row; }

// v weakly above and weakly right; the strict form is strict in both.
constexpr bool northeast(Node u, Node v) { return u.row >= v.row && u.col <= v.col; }
constexpr bool strictly_northeast(Node u, Node v) { return u.row > v.row && u.col < v.col; }

// v weakly below and weakly right; coincides with the partial order <=.
constexpr bool southeast(Node u, Node v) { return u.row <= v.row && u.col <= v.col; }
constexpr bool strictly_southeast(Node u, Node v) { return u.row < v.row && u.col < v.col; }

constexpr bool node_leq(Node u, Node v) { return southeast(u, v); }

struct NodeRelations {
    bool up, strictly_up;
    bool right, strictly_right;
    bool down, strictly_down;
    bool northeast, strictly_northeast;
    bool southeast, strictly_southeast;
    bool leq;
};

constexpr NodeRelations node_relations(Node u, Node v) {
    return NodeRelations{
        up(u, v),        strictly_up(u, v),        right(u, v),     strictly_right(u, v),
        down(u, v),      strictly_down(u, v),      northeast(u, v), strictly_northeast(u, v),
        southeast(u, v), strictly_southeast(u, v), node_leq(u, v),
    };
}

// Total order for containers and deterministic listings; unrelated to
// the diagram partial order.
constexpr bool row_major_less(Node a, Node b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
}

struct RowMajorLess {
    constexpr bool operator()(Node a, Node b) const { return row_major_less(a, b); }
};

inline std::string to_string(Node u) {
    return "(" + std::to_string(u.row) + "," + std::to_string(u.col) + ")";
}

} // namespace srsk
