#pragma once

// Textbook RSK via Schensted row insertion, used as an independent
// oracle on alphabets with no odd letters. Works on integer ranks and
// deliberately shares no code with the general insertion algorithm.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srsk/biword.hpp"

namespace srsk {

namespace detail {

// Insert r into the rows: bump the first strictly larger entry of row 0
// down to row 1, and so on; append when no entry is larger. Returns the
// (row, col) where a cell was created, 0-based.
inline std::pair<int, int> schensted_row_insert(std::vector<std::vector<int>>& rows, int r) {
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) rows.emplace_back();
        auto& row = rows[i];
        auto it = std::upper_bound(row.begin(), row.end(), r);
        if (it == row.end()) {
            row.push_back(r);
            return {static_cast<int>(i), static_cast<int>(row.size()) - 1};
        }
        std::swap(*it, r);
    }
}

} // namespace detail

// Both tableaux as rank grids: first the insertion tableau, then the
// recording tableau. Every letter of w must be even.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
classical_rsk_oracle(const Biword<Letter, Letter>& w) {
    std::vector<std::pair<int, int>> pairs; // (y, x), sorted lexicographically
    pairs.reserve(w.size());
    for (const auto& b : w) {
        if (is_odd(parity_of(b.x)) || is_odd(parity_of(b.y)))
            throw std::domain_error("classical_rsk_oracle: odd letter in biword");
        pairs.emplace_back(b.y.rank, b.x.rank);
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<std::vector<int>> insertion, recording;
    for (const auto& [y, x] : pairs) {
        const auto [row, col] = detail::schensted_row_insert(insertion, x);
        if (row == static_cast<int>(recording.size())) recording.emplace_back();
        if (col != static_cast<int>(recording[static_cast<std::size_t>(row)].size()))
            throw std::logic_error("classical_rsk_oracle: non-corner cell added");
        recording[static_cast<std::size_t>(row)].push_back(y);
    }
    return {std::move(insertion), std::move(recording)};
}

// Rank grid of a tableau, for comparing against the oracle.
template <LetterKind L>
std::vector<std::vector<int>> rank_grid(const Tableau<L>& t) {
    std::vector<std::vector<int>> out;
    for (int r = 1; r <= t.shape().rows(); ++r) {
        std::vector<int> row;
        for (int c = 1; c <= t.shape().row_length(r); ++c) {
            const auto& e = t.at(Node{r, c});
            if constexpr (std::same_as<L, Letter>)
                row.push_back(e.rank);
            else
                row.push_back(e.base.rank);
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace srsk
