#pragma once

// Exhaustive generators for small instances: partition shapes,
// semistandard tableaux, ordered restricted biwords, and the
// standardizations of a tableau. Everything is deterministic and
// returned in a fixed order so test runs are reproducible.

#include <functional>
#include <vector>

#include "srsk/biword.hpp"
#include "srsk/tableau.hpp"

namespace srsk {

// All partitions of exactly n, parts weakly decreasing, lexicographically
// largest first.
inline std::vector<Shape> shapes_with_cells(int n) {
    std::vector<Shape> out;
    std::vector<int> parts;
    const std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline std::vector<Shape> shapes_up_to(int max_cells) {
    std::vector<Shape> out;
    for (int n = 0; n <= max_cells; ++n)
        for (auto& s : shapes_with_cells(n)) out.push_back(std::move(s));
    return out;
}

// All semistandard tableaux over A of the given shape, by trying every
// letter cell-by-cell in row-major order and pruning against the two
// already-placed neighbours (which decides semistandardness exactly).
inline std::vector<Tableau<Letter>> semistandard_tableaux(const Alphabet& a, const Shape& shape) {
    std::vector<Tableau<Letter>> out;
    const auto cells = shape.nodes();
    std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(shape.rows()));

    const std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            out.push_back(Tableau<Letter>::from_rows(rows));
            return;
        }
        const Node u = cells[i];
        for (std::size_t r = 0; r < a.size(); ++r) {
            const Letter x = a.letter(r);
            if (u.col > 1) {
                const Letter& left = rows[u.row - 1][u.col - 2];
                if (natural_less(x, left)) continue;
                if (x == left && is_odd(x.par)) continue;
            }
            if (u.row > 1 && shape.row_length(u.row - 1) >= u.col) {
                const Letter& above = rows[u.row - 2][u.col - 1];
                if (natural_less(x, above)) continue;
                if (x == above && is_even(x.par)) continue;
            }
            rows[u.row - 1].push_back(x);
            rec(i + 1);
            rows[u.row - 1].pop_back();
        }
    };
    rec(0);
    return out;
}

// All semistandard tableaux over A with at most max_cells cells.
inline std::vector<Tableau<Letter>> semistandard_tableaux_up_to(const Alphabet& a, int max_cells) {
    std::vector<Tableau<Letter>> out;
    for (const Shape& s : shapes_up_to(max_cells))
        for (auto& t : semistandard_tableaux(a, s)) out.push_back(std::move(t));
    return out;
}

// All ordered restricted biwords of exactly len letters: weakly
// increasing multisets over the biletter order, with mixed biletters
// used at most once.
inline std::vector<Biword<Letter, Letter>> restricted_biwords(const Alphabet& x, const Alphabet& y,
                                                              int len) {
    std::vector<Biletter<Letter, Letter>> all;
    for (const Letter& b : y.letters())
        for (const Letter& a : x.letters()) all.push_back(Biletter<Letter, Letter>{a, b});
    std::sort(all.begin(), all.end(),
              [](const auto& p, const auto& q) { return biletter_less(p, q); });

    std::vector<Biword<Letter, Letter>> out;
    Biword<Letter, Letter> cur;
    const std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < all.size(); ++i) {
            const int cap = is_mixed(all[i]) ? 1 : left;
            for (int k = 1; k <= cap; ++k) {
                cur.insert(cur.end(), static_cast<std::size_t>(k), all[i]);
                rec(i + 1, left - k);
                cur.resize(cur.size() - static_cast<std::size_t>(k));
            }
        }
    };
    rec(0, len);
    return out;
}

inline std::vector<Biword<Letter, Letter>> restricted_biwords_up_to(const Alphabet& x,
                                                                    const Alphabet& y, int len) {
    std::vector<Biword<Letter, Letter>> out;
    for (int n = 0; n <= len; ++n)
        for (auto& w : restricted_biwords(x, y, n)) out.push_back(std::move(w));
    return out;
}

// Every standardization of t whose superscripts stay within each
// letter's multiplicity plus `slack`. Per letter the chosen superscript
// set determines the assignment (it must increase in the twisted order
// along the letter's northeast chain), so this is a product of subset
// choices; slack 0 yields exactly the canonical standardization.
inline std::vector<Tableau<StdLetter>> bullet_standardizations(const Tableau<Letter>& t,
                                                               int slack) {
    if (!is_semistandard(t)) throw std::domain_error("standardizations: tableau not semistandard");
    std::map<Letter, std::vector<Node>, NaturalLess> groups;
    for (Node u : t.shape().nodes()) groups[t.at(u)].push_back(u);
    for (auto& [letter, nodes] : groups) detail::sort_along_chain(nodes);

    std::vector<Tableau<StdLetter>> out;
    std::vector<std::vector<StdLetter>> rows(static_cast<std::size_t>(t.shape().rows()));
    for (int r = 1; r <= t.shape().rows(); ++r)
        rows[r - 1].resize(static_cast<std::size_t>(t.shape().row_length(r)));

    const std::function<void(std::map<Letter, std::vector<Node>, NaturalLess>::iterator)> rec =
        [&](auto it) {
            if (it == groups.end()) {
                out.push_back(Tableau<StdLetter>::from_rows(rows));
                return;
            }
            const auto& [letter, nodes] = *it;
            const int k = static_cast<int>(nodes.size());
            std::vector<int> sups; // the chosen superscript subset, ascending
            const std::function<void(int)> choose = [&](int next) {
                if (static_cast<int>(sups.size()) == k) {
                    for (int i = 0; i < k; ++i) {
                        const int sup = is_even(parity_of(letter)) ? sups[static_cast<std::size_t>(i)]
                                                                   : sups[static_cast<std::size_t>(k - 1 - i)];
                        rows[nodes[static_cast<std::size_t>(i)].row - 1]
                            [nodes[static_cast<std::size_t>(i)].col - 1] = with_sup(letter, sup);
                    }
                    rec(std::next(it));
                    return;
                }
                for (int s = next; s <= k + slack; ++s) {
                    sups.push_back(s);
                    choose(s + 1);
                    sups.pop_back();
                }
            };
            choose(1);
        };
    rec(groups.begin());
    return out;
}

} // namespace srsk
