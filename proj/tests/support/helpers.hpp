#pragma once

// Small builders so test data stays one-line: '/' separates tableau
// rows and biword entries.

#include <string>

#include <srsk/srsk.hpp>

namespace th {

inline srsk::Alphabet alpha(const std::string& tokens) { return srsk::parse_alphabet(tokens); }

inline std::string slash_to_lines(std::string text) {
    for (auto& ch : text)
        if (ch == '/') ch = '\n';
    return text;
}

inline srsk::Tableau<srsk::Letter> tab(const srsk::Alphabet& a, const std::string& rows) {
    return srsk::parse_tableau(a, slash_to_lines(rows));
}

inline srsk::Biword<srsk::Letter, srsk::Letter> bw(const srsk::Alphabet& ax,
                                                   const srsk::Alphabet& ay,
                                                   const std::string& pairs) {
    return srsk::parse_biword(ax, ay, slash_to_lines(pairs));
}

inline srsk::Node node(int r, int c) { return srsk::Node{r, c}; }

} // namespace th
