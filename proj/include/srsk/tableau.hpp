#pragma once

// Tableaux over a letter kind, the semistandard/standard predicates,
// conjugation and dualization, and standardization into superscripted
// letters.
//
// Lookups outside the shape return an empty optional, which every
// comparison helper treats as a +infinity sentinel.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srsk/alphabet.hpp"
#include "srsk/shape.hpp"

namespace srsk {

template <LetterKind L>
using Content = std::vector<std::pair<L, int>>; // sorted by natural order, multiplicities >= 1

template <LetterKind L>
class Tableau {
public:
    Tableau() = default;

    // Shape is derived from the row lengths.
    static Tableau from_rows(std::vector<std::vector<L>> rows) {
        std::vector<int> parts;
        parts.reserve(rows.size());
        for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
        Tableau t;
        t.shape_ = Shape(std::move(parts));
        t.rows_ = std::move(rows);
        return t;
    }

    const Shape& shape() const { return shape_; }

    const L& at(Node u) const {
        if (!shape_.contains(u)) throw std::out_of_range("tableau: node outside shape");
        return rows_[u.row - 1][u.col - 1];
    }

    // Empty result = the +infinity sentinel.
    std::optional<L> get(Node u) const {
        if (!shape_.contains(u)) return std::nullopt;
        return rows_[u.row - 1][u.col - 1];
    }

    void set(Node u, const L& x) {
        if (!shape_.contains(u)) throw std::out_of_range("tableau: node outside shape");
        rows_[u.row - 1][u.col - 1] = x;
    }

    // Grow by one cell at an addable node.
    void append_cell(Node u, const L& x) {
        shape_ = shape_.with_added(u); // throws if not addable
        if (u.row == static_cast<int>(rows_.size()) + 1) rows_.emplace_back();
        rows_[u.row - 1].push_back(x);
    }

    // Shrink by one cell at a removable node.
    void remove_cell(Node u) {
        shape_ = shape_.with_removed(u); // throws if not removable
        rows_[u.row - 1].pop_back();
        if (rows_[u.row - 1].empty()) rows_.pop_back();
    }

    Content<L> content() const {
        std::map<L, int, NaturalLess> mult;
        for (const auto& row : rows_)
            for (const auto& x : row) ++mult[x];
        return Content<L>(mult.begin(), mult.end());
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Shape shape_;
    std::vector<std::vector<L>> rows_;
};

// Entries weakly increase along rows and columns; a value repeated
// within a row must be even, within a column odd. Adjacent-cell checks
// suffice once weak monotonicity holds.
template <LetterKind L>
bool is_semistandard(const Tableau<L>& t) {
    const Shape& s = t.shape();
    for (int r = 1; r <= s.rows(); ++r) {
        for (int c = 1; c <= s.row_length(r); ++c) {
            const L& e = t.at(Node{r, c});
            if (auto rt = t.get(Node{r, c + 1})) {
                if (!natural_leq(e, *rt)) return false;
                if (e == *rt && is_odd(parity_of(e))) return false;
            }
            if (auto dn = t.get(Node{r + 1, c})) {
                if (!natural_leq(e, *dn)) return false;
                if (e == *dn && is_even(parity_of(e))) return false;
            }
        }
    }
    return true;
}

// Semistandard with pairwise distinct entries.
template <LetterKind L>
bool is_standard(const Tableau<L>& t) {
    if (!is_semistandard(t)) return false;
    std::vector<L> entries;
    for (Node u : t.shape().nodes()) entries.push_back(t.at(u));
    std::sort(entries.begin(), entries.end(), NaturalLess{});
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] == entries[i]) return false;
    return true;
}

template <LetterKind L>
Tableau<L> conjugate(const Tableau<L>& t) {
    const Shape conj = t.shape().conjugate();
    std::vector<std::vector<L>> rows;
    rows.reserve(static_cast<std::size_t>(conj.rows()));
    for (int r = 1; r <= conj.rows(); ++r) {
        std::vector<L> row;
        row.reserve(static_cast<std::size_t>(conj.row_length(r)));
        for (int c = 1; c <= conj.row_length(r); ++c) row.push_back(t.at(Node{c, r}));
        rows.push_back(std::move(row));
    }
    return Tableau<L>::from_rows(std::move(rows));
}

template <LetterKind L>
Tableau<dual_kind_t<L>> dual(const Tableau<L>& t) {
    std::vector<std::vector<dual_kind_t<L>>> rows;
    rows.reserve(static_cast<std::size_t>(t.shape().rows()));
    for (int r = 1; r <= t.shape().rows(); ++r) {
        std::vector<dual_kind_t<L>> row;
        for (int c = 1; c <= t.shape().row_length(r); ++c) row.push_back(dualize(t.at(Node{r, c})));
        rows.push_back(std::move(row));
    }
    return Tableau<dual_kind_t<L>>::from_rows(std::move(rows));
}

// conjugate-then-dualize, the transform that preserves semistandardness.
template <LetterKind L>
Tableau<dual_kind_t<L>> dual_conjugate(const Tableau<L>& t) {
    return dual(conjugate(t));
}

inline Tableau<Letter> forget_tableau(const Tableau<StdLetter>& t) {
    std::vector<std::vector<Letter>> rows;
    for (int r = 1; r <= t.shape().rows(); ++r) {
        std::vector<Letter> row;
        for (int c = 1; c <= t.shape().row_length(r); ++c) row.push_back(forget(t.at(Node{r, c})));
        rows.push_back(std::move(row));
    }
    return Tableau<Letter>::from_rows(std::move(rows));
}

namespace detail {
// Positions of one repeated letter in a semistandard tableau, listed
// along their northeast chain (bottom-left to top-right).
inline void sort_along_chain(std::vector<Node>& nodes) {
    std::sort(nodes.begin(), nodes.end(), [](Node a, Node b) {
        if (a.row != b.row) return a.row > b.row;
        return a.col < b.col;
    });
}
} // namespace detail

// U standardizes T: U is standard, forgetting superscripts gives T, and
// superscripts increase (in the twisted order) along the northeast
// chain of every repeated letter.
inline bool is_bullet_standardization(const Tableau<StdLetter>& u, const Tableau<Letter>& t) {
    if (u.shape() != t.shape()) throw std::domain_error("standardization: shape mismatch");
    if (!is_semistandard(t)) return false;
    if (!is_standard(u)) return false;
    if (forget_tableau(u) != t) return false;
    const auto nodes = t.shape().nodes();
    for (Node a : nodes)
        for (Node b : nodes) {
            if (a == b || !northeast(a, b)) continue;
            if (t.at(a) == t.at(b) && !prec_less(u.at(a), u.at(b))) return false;
        }
    return true;
}

// The canonical standardization: each letter's occurrences get the
// superscripts 1..k, laid out along the northeast chain so the twisted
// order increases (ascending for even letters, descending for odd).
inline Tableau<StdLetter> bullet_standardize(const Tableau<Letter>& t) {
    if (!is_semistandard(t)) throw std::domain_error("standardization: tableau not semistandard");
    std::map<Letter, std::vector<Node>, NaturalLess> positions;
    for (Node u : t.shape().nodes()) positions[t.at(u)].push_back(u);

    std::vector<std::vector<StdLetter>> rows(static_cast<std::size_t>(t.shape().rows()));
    for (int r = 1; r <= t.shape().rows(); ++r)
        rows[r - 1].resize(static_cast<std::size_t>(t.shape().row_length(r)));

    for (auto& [letter, nodes] : positions) {
        detail::sort_along_chain(nodes);
        const int k = static_cast<int>(nodes.size());
        for (int i = 0; i < k; ++i) {
            const int sup = is_even(parity_of(letter)) ? i + 1 : k - i;
            rows[nodes[i].row - 1][nodes[i].col - 1] = with_sup(letter, sup);
        }
    }
    return Tableau<StdLetter>::from_rows(std::move(rows));
}

} // namespace srsk
