#pragma once

// Biwords over a pair of parity-graded alphabets. A biletter is mixed
// when its two letters have opposite parities; a biword is restricted
// when no mixed biletter repeats, and ordered when it is sorted by the
// biletter order (right letters by natural order, ties by the twisted
// order on left letters).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srsk/alphabet.hpp"
#include "srsk/tableau.hpp"

namespace srsk {

template <LetterKind LX, LetterKind LY>
struct Biletter {
    LX x;
    LY y;

    friend constexpr bool operator==(const Biletter&, const Biletter&) = default;
};

template <LetterKind LX, LetterKind LY>
using Biword = std::vector<Biletter<LX, LY>>;

template <LetterKind LX, LetterKind LY>
constexpr bool is_mixed(const Biletter<LX, LY>& b) {
    return parity_of(b.x) + parity_of(b.y) == Parity::odd;
}

// Strict biletter order: by right letter naturally, then left letter in
// the twisted order.
template <LetterKind LX, LetterKind LY>
constexpr bool biletter_less(const Biletter<LX, LY>& a, const Biletter<LX, LY>& b) {
    if (natural_less(a.y, b.y)) return true;
    if (natural_less(b.y, a.y)) return false;
    return prec_less(a.x, b.x);
}

template <LetterKind LX, LetterKind LY>
constexpr bool biletter_leq(const Biletter<LX, LY>& a, const Biletter<LX, LY>& b) {
    return a == b || biletter_less(a, b);
}

// No repeated mixed biletter.
template <LetterKind LX, LetterKind LY>
bool is_restricted(const Biword<LX, LY>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j] && is_mixed(w[i])) return false;
    return true;
}

// Weakly increasing in the biletter order.
template <LetterKind LX, LetterKind LY>
bool is_ordered(const Biword<LX, LY>& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!biletter_leq(w[i - 1], w[i])) return false;
    return true;
}

// The sorted representative of w's rearrangement class.
template <LetterKind LX, LetterKind LY>
Biword<LX, LY> canonicalize(const Biword<LX, LY>& w) {
    Biword<LX, LY> out = w;
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return biletter_less(a, b); });
    return out;
}

// Swap the two components of every biletter and re-sort.
template <LetterKind LX, LetterKind LY>
Biword<LY, LX> invert(const Biword<LX, LY>& w) {
    if (!is_restricted(w)) throw std::domain_error("invert: biword not restricted");
    Biword<LY, LX> out;
    out.reserve(w.size());
    for (const auto& b : w) out.push_back(Biletter<LY, LX>{b.y, b.x});
    return canonicalize(out);
}

template <LetterKind LX, LetterKind LY>
Content<LX> left_content(const Biword<LX, LY>& w) {
    std::map<LX, int, NaturalLess> mult;
    for (const auto& b : w) ++mult[b.x];
    return Content<LX>(mult.begin(), mult.end());
}

template <LetterKind LX, LetterKind LY>
Content<LY> right_content(const Biword<LX, LY>& w) {
    std::map<LY, int, NaturalLess> mult;
    for (const auto& b : w) ++mult[b.y];
    return Content<LY>(mult.begin(), mult.end());
}

// Superscript every letter so all letters become distinct, mixed pairs
// in particular never repeat, and forgetting superscripts restores w.
// Multiplicities are spread so left superscripts grow with the
// twisted order of right letters, and right superscripts grow with the
// twisted order of left letters when the right letter is even but
// shrink when it is odd.
inline Biword<StdLetter, StdLetter> standardize_biword(const Biword<Letter, Letter>& w) {
    if (!is_restricted(w)) throw std::domain_error("standardize: biword not restricted");
    if (!is_ordered(w)) throw std::domain_error("standardize: biword not ordered");

    std::vector<Letter> xs, ys; // distinct letters, sorted by the twisted order
    {
        std::map<Letter, int, PrecLess> seen_x, seen_y;
        for (const auto& b : w) {
            ++seen_x[b.x];
            ++seen_y[b.y];
        }
        for (const auto& [x, n] : seen_x) xs.push_back(x);
        for (const auto& [y, n] : seen_y) ys.push_back(y);
    }

    // Multiplicity of each (x_i, y_j), indexed along the two orders.
    std::vector<std::vector<int>> mult(xs.size(), std::vector<int>(ys.size(), 0));
    for (const auto& b : w) {
        const auto i = std::lower_bound(xs.begin(), xs.end(), b.x, PrecLess{}) - xs.begin();
        const auto j = std::lower_bound(ys.begin(), ys.end(), b.y, PrecLess{}) - ys.begin();
        ++mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    Biword<StdLetter, StdLetter> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        int x_used = 0; // letters of x_i spent on twisted-earlier right letters
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const int l = mult[i][j];
            if (l == 0) continue;
            int y_before = 0; // letters of y_j spent on twisted-earlier left letters
            for (std::size_t i2 = 0; i2 < i; ++i2) y_before += mult[i2][j];
            for (int m = 1; m <= l; ++m) {
                const int xsup = x_used + m;
                const int ysup = is_even(parity_of(ys[j])) ? y_before + m : y_before + l + 1 - m;
                out.push_back(Biletter<StdLetter, StdLetter>{with_sup(xs[i], xsup),
                                                             with_sup(ys[j], ysup)});
            }
            x_used += l;
        }
    }
    return canonicalize(out);
}

// Drop all superscripts, keeping the biletter sequence as given.
inline Biword<Letter, Letter> forget_biword(const Biword<StdLetter, StdLetter>& w) {
    Biword<Letter, Letter> out;
    out.reserve(w.size());
    for (const auto& b : w) out.push_back(Biletter<Letter, Letter>{forget(b.x), forget(b.y)});
    return out;
}

} // namespace srsk
