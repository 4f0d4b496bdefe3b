#pragma once

// Parity-graded alphabets and the letter kinds built on top of them:
// plain letters, standardizing letters (base letter plus a positive
// superscript), and dual letters (parity flipped, ranks kept).
//
// Letters carry their alphabet rank so every comparison is an integer
// comparison; the alphabet itself only owns the display tokens.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srsk {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

// Z2 addition.
constexpr Parity operator+(Parity a, Parity b) {
    return Parity(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr bool is_even(Parity p) { return p == Parity::even; }
constexpr bool is_odd(Parity p) { return p == Parity::odd; }

// A letter of a parity-graded alphabet. rank is the 0-based position in
// the natural order of its alphabet.
struct Letter {
    std::int32_t rank = 0;
    Parity par = Parity::even;

    friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

// A standardizing letter: a base letter tagged with a superscript >= 1.
struct StdLetter {
    Letter base;
    std::int32_t sup = 1;

    friend constexpr bool operator==(const StdLetter&, const StdLetter&) = default;
};

// A dual letter: same rank as its base, opposite parity.
struct DualLetter {
    Letter base;

    friend constexpr bool operator==(const DualLetter&, const DualLetter&) = default;
};

constexpr Parity parity_of(const Letter& a) { return a.par; }
constexpr Parity parity_of(const StdLetter& a) { return a.base.par; }
constexpr Parity parity_of(const DualLetter& a) { return a.base.par + Parity::odd; }

// Natural (total) orders. Duals keep the base order; standardizing
// letters sort by base first, superscript second.
constexpr bool natural_less(const Letter& a, const Letter& b) { return a.rank < b.rank; }
constexpr bool natural_less(const StdLetter& a, const StdLetter& b) {
    if (a.base.rank != b.base.rank) return a.base.rank < b.base.rank;
    return a.sup < b.sup;
}
constexpr bool natural_less(const DualLetter& a, const DualLetter& b) {
    return a.base.rank < b.base.rank;
}

template <class L>
concept LetterKind = std::equality_comparable<L> && requires(const L& a, const L& b) {
    { parity_of(a) } -> std::same_as<Parity>;
    { natural_less(a, b) } -> std::same_as<bool>;
};

template <LetterKind L>
constexpr bool natural_leq(const L& a, const L& b) { return !natural_less(b, a); }

// The twisted order: every odd letter precedes every even letter, even
// letters keep the natural order, odd letters reverse it.
template <LetterKind L>
constexpr bool prec_less(const L& a, const L& b) {
    const bool ao = is_odd(parity_of(a));
    const bool bo = is_odd(parity_of(b));
    if (ao != bo) return ao;
    return ao ? natural_less(b, a) : natural_less(a, b);
}

template <LetterKind L>
constexpr bool prec_leq(const L& a, const L& b) { return a == b || prec_less(a, b); }

// Comparator objects for use with containers / std::sort.
struct NaturalLess {
    template <LetterKind L>
    constexpr bool operator()(const L& a, const L& b) const { return natural_less(a, b); }
};
struct PrecLess {
    template <LetterKind L>
    constexpr bool operator()(const L& a, const L& b) const { return prec_less(a, b); }
};

constexpr DualLetter dualize(const Letter& a) { return DualLetter{a}; }
constexpr Letter dualize(const DualLetter& a) { return a.base; }

// Maps each letter kind to the kind of its dual, so tableau-level
// dualization can round-trip at the type level.
template <LetterKind L> struct dual_kind;
template <> struct dual_kind<Letter> { using type = DualLetter; };
template <> struct dual_kind<DualLetter> { using type = Letter; };
template <LetterKind L> using dual_kind_t = typename dual_kind<L>::type;

constexpr Letter forget(const StdLetter& a) { return a.base; }

constexpr StdLetter with_sup(const Letter& a, std::int32_t sup) { return StdLetter{a, sup}; }

// A finite parity-graded alphabet. Tokens are kept exactly as written;
// a leading '^' marks the letter odd and stays part of the token.
class Alphabet {
public:
    Alphabet() = default;

    // Tokens must be listed in increasing natural order.
    static Alphabet from_tokens(const std::vector<std::string>& tokens) {
        Alphabet a;
        for (const auto& tok : tokens) a.push_token(tok);
        return a;
    }

    std::size_t size() const { return tokens_.size(); }

    Letter letter(std::size_t rank) const {
        if (rank >= tokens_.size()) throw std::out_of_range("alphabet: rank out of range");
        return Letter{static_cast<std::int32_t>(rank), parities_[rank]};
    }

    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        out.reserve(size());
        for (std::size_t r = 0; r < size(); ++r) out.push_back(letter(r));
        return out;
    }

    bool contains(const Letter& x) const {
        return x.rank >= 0 && static_cast<std::size_t>(x.rank) < size() &&
               parities_[static_cast<std::size_t>(x.rank)] == x.par;
    }
    bool contains(const StdLetter& x) const { return x.sup >= 1 && contains(x.base); }
    bool contains(const DualLetter& x) const { return contains(x.base); }

    const std::string& token(std::size_t rank) const {
        if (rank >= tokens_.size()) throw std::out_of_range("alphabet: rank out of range");
        return tokens_[rank];
    }

    std::optional<Letter> find(std::string_view token) const {
        for (std::size_t r = 0; r < tokens_.size(); ++r)
            if (tokens_[r] == token) return letter(r);
        return std::nullopt;
    }

    // Parity flipped, ranks and base names kept; display tokens get a
    // trailing '*'. Dual alphabets are display-only, never parsed back.
    Alphabet dual() const {
        Alphabet a;
        a.tokens_.reserve(size());
        a.parities_.reserve(size());
        for (std::size_t r = 0; r < size(); ++r) {
            a.tokens_.push_back(tokens_[r] + "*");
            a.parities_.push_back(parities_[r] + Parity::odd);
        }
        return a;
    }

    bool all_even() const {
        for (Parity p : parities_)
            if (is_odd(p)) return false;
        return true;
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    void push_token(const std::string& tok) {
        Parity p = Parity::even;
        if (!tok.empty() && tok.front() == '^') p = Parity::odd;
        if (tok.empty() || (p == Parity::odd && tok.size() == 1))
            throw std::invalid_argument("alphabet: empty letter token");
        for (const auto& seen : tokens_)
            if (seen == tok) throw std::invalid_argument("alphabet: duplicate token '" + tok + "'");
        tokens_.push_back(tok);
        parities_.push_back(p);
    }

    std::vector<std::string> tokens_;
    std::vector<Parity> parities_;
};

namespace detail {
template <class L>
void require_in(const Alphabet& a, const L& x, const char* who) {
    if (!a.contains(x)) throw std::domain_error(std::string(who) + ": letter not in alphabet");
}
} // namespace detail

// Checked three-way comparisons in the natural and twisted orders.
inline std::strong_ordering cmp_natural(const Letter& a, const Letter& b, const Alphabet& A) {
    detail::require_in(A, a, "cmp_natural");
    detail::require_in(A, b, "cmp_natural");
    if (natural_less(a, b)) return std::strong_ordering::less;
    if (natural_less(b, a)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline std::strong_ordering cmp_prec(const Letter& a, const Letter& b, const Alphabet& A) {
    detail::require_in(A, a, "cmp_prec");
    detail::require_in(A, b, "cmp_prec");
    if (prec_less(a, b)) return std::strong_ordering::less;
    if (prec_less(b, a)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Natural order on standardizing letters (base, then superscript).
inline std::strong_ordering cmp_std(const StdLetter& a, const StdLetter& b, const Alphabet& A) {
    detail::require_in(A, a, "cmp_std");
    detail::require_in(A, b, "cmp_std");
    if (natural_less(a, b)) return std::strong_ordering::less;
    if (natural_less(b, a)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace srsk
