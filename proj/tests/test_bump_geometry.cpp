#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support/helpers.hpp"

using namespace srsk;

namespace {
const Alphabet A6 = th::alpha("^1 1 ^2 2 ^3 3");
const Alphabet A2 = th::alpha("^1 1");

Letter L(const char* tok) { return *A6.find(tok); }
} // namespace

TEST_CASE("nearest bumped node to the left / above") {
    const auto t = th::tab(A6, "1 ^2 2 / ^3 3 / ^3");
    const auto ins = epsilon_insert(t, Parity::even, L("1"));
    // walk: (1,2) (1,3) (2,1) (2,2) (3,2)
    CHECK(nearest_bumped_left(ins.trace, th::node(2, 2)) == 3);
    CHECK(nearest_bumped_above(ins.trace, th::node(2, 2)) == 1);
    CHECK(nearest_bumped_left(ins.trace, th::node(1, 2)) == 0);
    CHECK(nearest_bumped_above(ins.trace, th::node(3, 2)) == 4);
    CHECK(nearest_bumped_left(ins.trace, th::node(1, 4)) == 2);

    const auto first = epsilon_insert(Tableau<Letter>(), Parity::even, L("1"));
    CHECK(nearest_bumped_left(first.trace, th::node(1, 2)) == 1);
    CHECK(nearest_bumped_left(first.trace, th::node(2, 1)) == 0);
    CHECK(nearest_bumped_above(first.trace, th::node(2, 1)) == 1);
}

TEST_CASE("region split of a one-bump insertion") {
    // Even letter, row-first: the node right of the bump is northeast,
    // the bump itself and the node below stay southwest.
    const auto part = ne_sw_partition(Tableau<Letter>(), Parity::even, L("1"));
    CHECK(part.universe == std::vector<Node>{th::node(1, 1), th::node(1, 2), th::node(2, 1)});
    CHECK(part.northeast == std::vector<Node>{th::node(1, 2)});
    CHECK(part.southwest == std::vector<Node>{th::node(1, 1), th::node(2, 1)});

    // Odd letter under the same parameter scans a column first, so the
    // untouched default flips.
    const auto podd = ne_sw_partition(Tableau<Letter>(), Parity::even, L("^1"));
    CHECK(podd.northeast == std::vector<Node>{th::node(1, 1), th::node(1, 2)});
    CHECK(podd.southwest == std::vector<Node>{th::node(2, 1)});
}

TEST_CASE("regions partition the grown diagram with its addable nodes") {
    for (const auto& t : semistandard_tableaux_up_to(A2, 4))
        for (Parity eps : {Parity::even, Parity::odd})
            for (const Letter& y : A2.letters()) {
                const auto part = ne_sw_partition(t, eps, y);
                std::set<std::pair<int, int>> seen;
                for (Node u : part.northeast) seen.insert({u.row, u.col});
                for (Node u : part.southwest) seen.insert({u.row, u.col});
                CHECK(seen.size() == part.northeast.size() + part.southwest.size());
                CHECK(seen.size() == part.universe.size());
                for (Node u : part.universe) CHECK(seen.count({u.row, u.col}) == 1);
            }
}

TEST_CASE("region of each bumped node matches the parity of what landed there") {
    // On the worked example: the letters landing on the walk alternate
    // even/odd as row and column scans alternate.
    const auto t = th::tab(A6, "1 ^2 2 / ^3 3 / ^3");
    const Parity eps = Parity::even;
    const auto ins = epsilon_insert(t, eps, L("1"));
    const auto part = ne_sw_partition(t, eps, L("1"));
    const std::vector<bool> expect_ne = {false, true, false, true, false};
    for (std::size_t i = 0; i < ins.trace.bumped_nodes.size(); ++i) {
        CHECK(part.in_northeast(ins.trace.bumped_nodes[i]) == expect_ne[i]);
        const bool tag = is_odd(eps + parity_of(ins.trace.bumped_letters[i]));
        CHECK(part.in_northeast(ins.trace.bumped_nodes[i]) == tag);
    }

    // The same parity tag rule, exhaustively at small size.
    for (const auto& tt : semistandard_tableaux_up_to(A2, 4))
        for (Parity e : {Parity::even, Parity::odd})
            for (const Letter& y : A2.letters()) {
                const auto ii = epsilon_insert(tt, e, y);
                const auto pp = ne_sw_partition(tt, e, y);
                for (std::size_t i = 0; i < ii.trace.bumped_nodes.size(); ++i)
                    CHECK(pp.in_northeast(ii.trace.bumped_nodes[i]) ==
                          is_odd(e + parity_of(ii.trace.bumped_letters[i])));
            }
}

TEST_CASE("second insertion lands in the predicted region") {
    // Equal even letters chase each other east, equal odd letters south.
    CHECK(check_node_containment(Tableau<Letter>(), Parity::even, L("1"), L("1")));
    CHECK(check_node_containment(Tableau<Letter>(), Parity::even, L("^1"), L("^1")));

    for (const auto& t : semistandard_tableaux_up_to(A2, 3))
        for (Parity eps : {Parity::even, Parity::odd})
            for (const Letter& y : A2.letters())
                for (const Letter& z : A2.letters())
                    CHECK(check_node_containment(t, eps, y, z));
}

TEST_CASE("added nodes are ordered northeast exactly when predicted") {
    const auto two_evens = epsilon_insert(Tableau<Letter>(), Parity::even, L("1"));
    const auto then = epsilon_insert(two_evens.tableau, Parity::even, L("1"));
    CHECK(northeast(two_evens.trace.added_node(), then.trace.added_node()));

    CHECK(check_added_node_order(Tableau<Letter>(), Parity::even, L("1"), L("1")));
    CHECK(check_added_node_order(Tableau<Letter>(), Parity::even, L("^1"), L("^1")));

    for (const auto& t : semistandard_tableaux_up_to(A2, 3))
        for (Parity eps : {Parity::even, Parity::odd})
            for (const Letter& y : A2.letters())
                for (const Letter& z : A2.letters())
                    CHECK(check_added_node_order(t, eps, y, z));
}
