#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support/helpers.hpp"

using namespace srsk;

namespace {
const Alphabet A6 = th::alpha("^1 1 ^2 2 ^3 3");
const Alphabet A2 = th::alpha("^1 1");

Letter L(const char* tok) { return *A6.find(tok); }

// The eight-letter running example.
const Biword<Letter, Letter> W =
    th::bw(A6, A6, "^3 ^1 / 1 ^2 / 2 2 / 3 2 / ^3 ^3 / ^3 ^3 / ^2 3 / ^1 3");

StdLetter S(const char* tok, int sup) { return with_sup(*A6.find(tok), sup); }
} // namespace

TEST_CASE("biletter order: right letter first, twisted tie-break") {
    const auto b = [](Letter x, Letter y) { return Biletter<Letter, Letter>{x, y}; };
    CHECK(biletter_less(b(L("1"), L("^2")), b(L("3"), L("2"))));   // y decides
    CHECK(biletter_less(b(L("^3"), L("2")), b(L("^1"), L("2")))); // tie: odd x reversed
    CHECK(biletter_less(b(L("^1"), L("2")), b(L("1"), L("2"))));  // tie: odd before even
    CHECK_FALSE(biletter_less(b(L("1"), L("2")), b(L("1"), L("2"))));
    CHECK(biletter_leq(b(L("1"), L("2")), b(L("1"), L("2"))));
}

TEST_CASE("mixed biletters and restrictedness") {
    CHECK(is_mixed(Biletter<Letter, Letter>{L("^3"), L("2")}));
    CHECK_FALSE(is_mixed(Biletter<Letter, Letter>{L("^3"), L("^1")}));
    CHECK(is_restricted(W)); // (^3,^3) repeats but is unmixed
    auto bad = W;
    bad.push_back(Biletter<Letter, Letter>{L("^2"), L("3")}); // repeat a mixed biletter
    CHECK_FALSE(is_restricted(bad));
    CHECK(is_restricted(Biword<Letter, Letter>{}));
}

TEST_CASE("canonical order") {
    CHECK(is_ordered(W));
    CHECK(canonicalize(W) == W);
    auto shuffled = W;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK_FALSE(is_ordered(shuffled));
    CHECK(canonicalize(shuffled) == W);
    CHECK(canonicalize(Biword<Letter, Letter>{}).empty());
}

TEST_CASE("inversion of the running example") {
    const auto winv = invert(W);
    CHECK(winv == th::bw(A6, A6, "3 ^1 / ^2 1 / 3 ^2 / 2 2 / ^3 ^3 / ^3 ^3 / ^1 ^3 / 2 3"));
    CHECK(is_ordered(winv));
    CHECK(is_restricted(winv));
    CHECK(invert(winv) == W); // involutive on sorted biwords
    CHECK(invert(Biword<Letter, Letter>{}).empty());
}

TEST_CASE("contents of a biword") {
    const auto lc = left_content(W);
    REQUIRE(lc.size() == 6);
    CHECK(lc[4] == std::make_pair(L("^3"), 3));
    const auto rc = right_content(W);
    REQUIRE(rc.size() == 5);
    CHECK(rc[2] == std::make_pair(L("2"), 2));
}

TEST_CASE("superscripting the running example") {
    const auto ws = standardize_biword(W);
    const Biword<StdLetter, StdLetter> expect = {
        {S("^3", 3), S("^1", 1)}, {S("1", 1), S("^2", 1)}, {S("2", 1), S("2", 1)},
        {S("3", 1), S("2", 2)},   {S("^3", 2), S("^3", 1)}, {S("^3", 1), S("^3", 2)},
        {S("^2", 1), S("3", 1)},  {S("^1", 1), S("3", 2)},
    };
    CHECK(ws == expect);

    // The repeated unmixed pair (^3,^3): left superscripts increase
    // with the right ones decreasing across the pair.
    CHECK(ws[4].x.sup == 2);
    CHECK(ws[4].y.sup == 1);
    CHECK(ws[5].x.sup == 1);
    CHECK(ws[5].y.sup == 2);

    CHECK(forget_biword(ws) == W);
    CHECK(is_ordered(ws));
    CHECK(is_restricted(ws));
}

TEST_CASE("superscripting distinct letters uses superscript 1 throughout") {
    const auto w = th::bw(A6, A6, "^1 1 / 2 ^2");
    for (const auto& b : standardize_biword(w)) {
        CHECK(b.x.sup == 1);
        CHECK(b.y.sup == 1);
    }
    CHECK(standardize_biword(Biword<Letter, Letter>{}).empty());
}

TEST_CASE("superscripting requires an ordered restricted biword") {
    auto shuffled = W;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK_THROWS_AS(standardize_biword(shuffled), std::domain_error);
    auto bad = W;
    bad.push_back(Biletter<Letter, Letter>{L("^2"), L("3")});
    CHECK_THROWS_AS(standardize_biword(canonicalize(bad)), std::domain_error);
}

TEST_CASE("superscripting commutes with inversion on the running example") {
    CHECK(invert(standardize_biword(W)) == standardize_biword(invert(W)));
}

TEST_CASE("superscripting laws, exhaustively at small size") {
    for (int len = 0; len <= 3; ++len) {
        for (const auto& w : restricted_biwords(A2, A2, len)) {
            const auto ws = standardize_biword(w);
            CHECK(forget_biword(ws) == w);
            CHECK(is_ordered(ws));
            CHECK(invert(ws) == standardize_biword(invert(w)));
            // all superscripted letters distinct on each side
            std::set<std::pair<int, int>> xs, ys;
            for (const auto& b : ws) {
                xs.insert({b.x.base.rank, b.x.sup});
                ys.insert({b.y.base.rank, b.y.sup});
            }
            CHECK(xs.size() == ws.size());
            CHECK(ys.size() == ws.size());
        }
    }
}
