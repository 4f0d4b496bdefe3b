#pragma once

// The correspondence itself: a restricted biword maps to a pair of
// same-shape semistandard tableaux. Each biletter (x, y) inserts x with
// the parity of y as the insertion parameter and records y at the node
// the insertion added.

#include <stdexcept>
#include <utility>
#include <vector>

#include "srsk/biword.hpp"
#include "srsk/insertion.hpp"

namespace srsk {

template <LetterKind LX, LetterKind LY>
struct RskResult {
    Tableau<LX> insertion_tableau;
    Tableau<LY> recording_tableau;
    std::vector<InsertionTrace<LX>> steps; // one per biletter, in sorted order

    std::vector<Node> added_nodes() const {
        std::vector<Node> out;
        out.reserve(steps.size());
        for (const auto& s : steps) out.push_back(s.added_node());
        return out;
    }
};

// The map is constant on rearrangement classes, so the input is sorted
// first; it need not arrive ordered.
template <LetterKind LX, LetterKind LY>
RskResult<LX, LY> srsk(const Biword<LX, LY>& w) {
    if (!is_restricted(w)) throw std::domain_error("srsk: biword not restricted");
    const auto sorted = canonicalize(w);

    RskResult<LX, LY> out;
    for (const auto& b : sorted) {
        auto ins = epsilon_insert(out.insertion_tableau, parity_of(b.y), b.x);
        out.recording_tableau.append_cell(ins.trace.added_node(), b.y);
        out.insertion_tableau = std::move(ins.tableau);
        out.steps.push_back(std::move(ins.trace));
    }
    if (!is_semistandard(out.recording_tableau))
        throw std::logic_error("srsk: recording tableau not semistandard");
    return out;
}

// Inverse map: repeatedly take the naturally largest recorded letter,
// at its rightmost node when even and bottommost when odd, and extract
// there to recover the biletters from last to first.
template <LetterKind LX, LetterKind LY>
Biword<LX, LY> srsk_inverse(const Tableau<LX>& insertion, const Tableau<LY>& recording) {
    if (insertion.shape() != recording.shape())
        throw std::domain_error("srsk_inverse: tableaux differ in shape");
    if (!is_semistandard(insertion) || !is_semistandard(recording))
        throw std::domain_error("srsk_inverse: tableaux not semistandard");

    Tableau<LX> ins = insertion;
    Tableau<LY> rec = recording;
    Biword<LX, LY> out(static_cast<std::size_t>(insertion.shape().cells()));
    for (std::size_t i = out.size(); i-- > 0;) {
        Node u{0, 0};
        bool found = false;
        LY y{};
        for (Node v : rec.shape().nodes()) {
            const LY& e = rec.at(v);
            if (!found || natural_less(y, e)) {
                y = e;
                u = v;
                found = true;
            } else if (!natural_less(e, y)) {
                // same letter: keep the rightmost (even) / bottommost (odd)
                if (is_even(parity_of(e)) ? v.col > u.col : v.row > u.row) u = v;
            }
        }
        if (!rec.shape().is_removable(u))
            throw std::logic_error("srsk_inverse: selected node not removable");
        auto ext = epsilon_extract(ins, parity_of(y), u);
        out[i] = Biletter<LX, LY>{ext.trace.extracted_letter(), y};
        ins = std::move(ext.tableau);
        rec.remove_cell(u);
    }
    return out;
}

} // namespace srsk
