#pragma once

// Text and JSON readers/writers for alphabets, tableaux and biwords.
//
// Alphabet files list letter tokens in increasing order; a leading '^'
// marks a letter odd. Tableau files hold one row per line. Biword files
// hold one "x-token y-token" pair per line. The JSON alternatives are
// {"shape": [...], "rows": [[tokens]]} for tableaux and a list of
// two-element token arrays for biwords. Superscripted letters render as
// token(i).

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srsk/biword.hpp"
#include "srsk/tableau.hpp"

namespace srsk {

inline std::vector<std::string> split_tokens(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline Alphabet parse_alphabet(std::string_view text) {
    return Alphabet::from_tokens(split_tokens(text));
}

inline std::string format_alphabet(const Alphabet& a) {
    std::string out;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (r) out += ' ';
        out += a.token(r);
    }
    return out;
}

inline std::string format_letter(const Alphabet& a, const Letter& x) {
    detail::require_in(a, x, "format_letter");
    return a.token(static_cast<std::size_t>(x.rank));
}

inline std::string format_letter(const Alphabet& a, const StdLetter& x) {
    return format_letter(a, x.base) + "(" + std::to_string(x.sup) + ")";
}

inline std::string format_letter(const Alphabet& a, const DualLetter& x) {
    return format_letter(a, x.base) + "*";
}

inline Letter parse_letter(const Alphabet& a, std::string_view token) {
    if (auto x = a.find(token)) return *x;
    throw std::invalid_argument("unknown letter token '" + std::string(token) + "'");
}

// --- tableaux ---

inline Tableau<Letter> parse_tableau(const Alphabet& a, std::string_view text) {
    std::vector<std::vector<Letter>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        std::vector<Letter> row;
        row.reserve(tokens.size());
        for (const auto& tok : tokens) row.push_back(parse_letter(a, tok));
        rows.push_back(std::move(row));
    }
    return Tableau<Letter>::from_rows(std::move(rows)); // validates the shape
}

template <LetterKind L>
std::string format_tableau(const Alphabet& a, const Tableau<L>& t) {
    std::string out;
    for (int r = 1; r <= t.shape().rows(); ++r) {
        for (int c = 1; c <= t.shape().row_length(r); ++c) {
            if (c > 1) out += ' ';
            out += format_letter(a, t.at(Node{r, c}));
        }
        out += '\n';
    }
    return out;
}

inline Tableau<Letter> parse_tableau_json(const Alphabet& a, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
        throw std::invalid_argument("tableau json: expected {\"shape\": ..., \"rows\": ...}");
    std::vector<std::vector<Letter>> rows;
    for (const auto& jrow : j.at("rows")) {
        std::vector<Letter> row;
        for (const auto& jtok : jrow) row.push_back(parse_letter(a, jtok.get<std::string>()));
        rows.push_back(std::move(row));
    }
    auto t = Tableau<Letter>::from_rows(std::move(rows));
    const auto jshape = j.at("shape").get<std::vector<int>>();
    if (Shape(jshape) != t.shape())
        throw std::invalid_argument("tableau json: shape does not match rows");
    return t;
}

template <LetterKind L>
nlohmann::json tableau_to_json(const Alphabet& a, const Tableau<L>& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= t.shape().rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= t.shape().row_length(r); ++c)
            row.push_back(format_letter(a, t.at(Node{r, c})));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"shape", t.shape().parts()}, {"rows", std::move(rows)}};
}

// --- biwords ---

inline Biword<Letter, Letter> parse_biword(const Alphabet& ax, const Alphabet& ay,
                                           std::string_view text) {
    Biword<Letter, Letter> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw std::invalid_argument("biword line must hold exactly two tokens: '" + line + "'");
        out.push_back(Biletter<Letter, Letter>{parse_letter(ax, tokens[0]),
                                               parse_letter(ay, tokens[1])});
    }
    return out;
}

template <LetterKind LX, LetterKind LY>
std::string format_biword(const Alphabet& ax, const Alphabet& ay, const Biword<LX, LY>& w) {
    std::string out;
    for (const auto& b : w) {
        out += format_letter(ax, b.x);
        out += ' ';
        out += format_letter(ay, b.y);
        out += '\n';
    }
    return out;
}

inline Biword<Letter, Letter> parse_biword_json(const Alphabet& ax, const Alphabet& ay,
                                                const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("biword json: expected a list of pairs");
    Biword<Letter, Letter> out;
    for (const auto& jpair : j) {
        if (!jpair.is_array() || jpair.size() != 2)
            throw std::invalid_argument("biword json: each entry must be a two-element array");
        out.push_back(Biletter<Letter, Letter>{parse_letter(ax, jpair.at(0).get<std::string>()),
                                               parse_letter(ay, jpair.at(1).get<std::string>())});
    }
    return out;
}

template <LetterKind LX, LetterKind LY>
nlohmann::json biword_to_json(const Alphabet& ax, const Alphabet& ay, const Biword<LX, LY>& w) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& b : w)
        out.push_back(nlohmann::json::array({format_letter(ax, b.x), format_letter(ay, b.y)}));
    return out;
}

} // namespace srsk
