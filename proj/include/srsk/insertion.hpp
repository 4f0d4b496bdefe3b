#pragma once

// The two-parameter insertion and extraction algorithms on semistandard
// tableaux. The parameter eps together with the parity of the letter
// being placed decides whether the next scan runs along a row (even
// sum) or a column (odd sum); eps alone decides whether displacement
// uses strict (<) or weak (<=) comparison.
//
// All scans compare against the tableau as it was on entry; updates are
// collected and applied afterwards, so the trace depends only on the
// input.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srsk/tableau.hpp"

namespace srsk {

// a < b, extended so that an absent value (outside the shape) acts as
// +infinity: x < inf for every letter x, and inf < inf only weakly.
template <LetterKind L>
bool eps_less(Parity eps, const std::optional<L>& a, const std::optional<L>& b) {
    if (!a) return !b && is_odd(eps);
    if (!b) return true;
    return is_even(eps) ? natural_less(*a, *b) : natural_leq(*a, *b);
}

template <LetterKind L>
bool eps_greater(Parity eps, const std::optional<L>& a, const std::optional<L>& b) {
    return eps_less(eps, b, a);
}

template <LetterKind L>
struct InsertionTrace {
    std::vector<Node> bumped_nodes;  // b_1 .. b_m
    std::vector<L> bumped_letters;   // x_1 .. x_m, x_1 the inserted letter

    Node added_node() const { return bumped_nodes.back(); }
};

template <LetterKind L>
struct Insertion {
    Tableau<L> tableau;
    InsertionTrace<L> trace;
};

template <LetterKind L>
struct ExtractionTrace {
    std::vector<Node> unbumped_nodes; // c_1 .. c_m, c_1 the removed node
    std::vector<L> unbumped_letters;  // y_1 .. y_m

    const L& extracted_letter() const { return unbumped_letters.back(); }
};

template <LetterKind L>
struct Extraction {
    Tableau<L> tableau;
    ExtractionTrace<L> trace;
};

namespace detail {

// Smallest node of row/column `line` (even: row, odd: column) whose
// value x is strictly/weakly below, i.e. eps_less(eps, x, value).
// Always exists because the first cell past the shape reads +infinity.
template <LetterKind L>
Node scan_forward(const Tableau<L>& t, Parity line_kind, int line, Parity eps, const L& x) {
    // Terminates: the first cell past the line's end always matches.
    for (int i = 1;; ++i) {
        const Node u = is_even(line_kind) ? Node{line, i} : Node{i, line};
        if (eps_less(eps, std::optional<L>(x), t.get(u))) return u;
    }
}

// Greatest in-shape node of the given line whose value y strictly/
// weakly exceeds, i.e. eps_greater(eps, y, value); nullopt if none.
template <LetterKind L>
std::optional<Node> scan_backward(const Tableau<L>& t, Parity line_kind, int line, Parity eps,
                                  const L& y) {
    const int len = is_even(line_kind) ? t.shape().row_length(line) : t.shape().col_length(line);
    for (int i = len; i >= 1; --i) {
        const Node u = is_even(line_kind) ? Node{line, i} : Node{i, line};
        if (eps_greater(eps, std::optional<L>(y), t.get(u))) return u;
    }
    return std::nullopt;
}

} // namespace detail

// Insert x into t. The displaced letter from each bump is re-inserted
// starting one line past the node that displaced it; the walk ends when
// a letter lands outside the shape, growing it by that node.
template <LetterKind L>
Insertion<L> epsilon_insert(const Tableau<L>& t, Parity eps, const L& x) {
    if (!is_semistandard(t)) throw std::domain_error("insertion: tableau not semistandard");

    InsertionTrace<L> trace;
    L moving = x;
    int line = 1;
    const int bump_limit = t.shape().cells() + 1;
    for (;;) {
        if (static_cast<int>(trace.bumped_nodes.size()) >= bump_limit)
            throw std::logic_error("insertion: bump count exceeded shape size");
        const Parity line_kind = eps + parity_of(moving);
        const Node b = detail::scan_forward(t, line_kind, line, eps, moving);
        trace.bumped_nodes.push_back(b);
        trace.bumped_letters.push_back(moving);
        const auto occupant = t.get(b);
        if (!occupant) break;
        moving = *occupant;
        line = coord(b, eps + parity_of(moving)) + 1;
    }

    Tableau<L> out = t;
    const std::size_t m = trace.bumped_nodes.size();
    for (std::size_t j = 0; j + 1 < m; ++j) out.set(trace.bumped_nodes[j], trace.bumped_letters[j]);
    out.append_cell(trace.bumped_nodes[m - 1], trace.bumped_letters[m - 1]);
    return Insertion<L>{std::move(out), std::move(trace)};
}

// Remove the (removable) node u from t, undoing one insertion: each
// letter on the walk displaces downward the letter that would have
// displaced it, and the last letter visited leaves the tableau.
template <LetterKind L>
Extraction<L> epsilon_extract(const Tableau<L>& t, Parity eps, Node u) {
    if (!is_semistandard(t)) throw std::domain_error("extraction: tableau not semistandard");
    if (!t.shape().is_removable(u)) throw std::domain_error("extraction: node not removable");

    ExtractionTrace<L> trace;
    trace.unbumped_nodes.push_back(u);
    trace.unbumped_letters.push_back(t.at(u));
    for (;;) {
        const L& y = trace.unbumped_letters.back();
        const int line = coord(trace.unbumped_nodes.back(), eps + parity_of(y)) - 1;
        if (line == 0) break;
        const auto c = detail::scan_backward(t, eps + parity_of(y), line, eps, y);
        if (!c) throw std::logic_error("extraction: no displaceable letter on line");
        trace.unbumped_nodes.push_back(*c);
        trace.unbumped_letters.push_back(t.at(*c));
    }

    Tableau<L> out = t;
    out.remove_cell(u);
    for (std::size_t k = 1; k < trace.unbumped_nodes.size(); ++k)
        out.set(trace.unbumped_nodes[k], trace.unbumped_letters[k - 1]);
    return Extraction<L>{std::move(out), std::move(trace)};
}

// Convenience for tests: inserting then extracting at the added node
// (and the reverse) must reproduce the starting point exactly.
template <LetterKind L>
bool insert_extract_roundtrip(const Tableau<L>& t, Parity eps, const L& x) {
    const auto ins = epsilon_insert(t, eps, x);
    const auto ext = epsilon_extract(ins.tableau, eps, ins.trace.added_node());
    return ext.tableau == t && ext.trace.extracted_letter() == x;
}

template <LetterKind L>
bool extract_insert_roundtrip(const Tableau<L>& t, Parity eps, Node u) {
    const auto ext = epsilon_extract(t, eps, u);
    const auto ins = epsilon_insert(ext.tableau, eps, ext.trace.extracted_letter());
    return ins.tableau == t && ins.trace.added_node() == u;
}

} // namespace srsk
