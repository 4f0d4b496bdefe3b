// Acceptance suite: one line of output per criterion, detail only on
// failure, nonzero exit if anything failed. Runs standalone (no test
// framework) so the printed verdict is the whole story.

#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <srsk/srsk.hpp>

#include "support/helpers.hpp"
#include "support/trace_checks.hpp"

using namespace srsk;

namespace {

struct Criterion {
    int number = 0;
    std::string description;
    bool passed = true;
    std::vector<std::string> details;

    Criterion(int n, std::string text) : number(n), description(std::move(text)) {}

    void fail(std::string detail) {
        passed = false;
        if (details.size() < 12) details.push_back(std::move(detail));
    }
    void require(bool ok, const std::string& detail) {
        if (!ok) fail(detail);
    }
};

int hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n ? static_cast<int>(n) : 2;
}

const Alphabet& a6() {
    static const Alphabet a = th::alpha("^1 1 ^2 2 ^3 3");
    return a;
}

const Alphabet& a4() {
    static const Alphabet a = th::alpha("^1 1 ^2 2");
    return a;
}

std::string show(const Tableau<Letter>& t) {
    std::string text = format_tableau(a6(), t);
    for (auto& ch : text)
        if (ch == '\n') ch = '/';
    return text.empty() ? "(empty)" : text;
}

std::vector<Node> nodes_of(const std::string& pairs) {
    std::vector<Node> out;
    int r = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i] < '0' || pairs[i] > '9') continue;
        int v = 0;
        while (i < pairs.size() && pairs[i] >= '0' && pairs[i] <= '9') v = 10 * v + (pairs[i++] - '0');
        if (r == 0)
            r = v;
        else {
            out.push_back(Node{r, v});
            r = 0;
        }
    }
    return out;
}

std::vector<Letter> letters_of(const std::string& tokens) {
    std::vector<Letter> out;
    for (const auto& tok : split_tokens(tokens)) out.push_back(parse_letter(a6(), tok));
    return out;
}

// --- criterion 1: frozen worked examples ---

void run_worked_examples(Criterion& c) {
    const Alphabet& a = a6();
    const auto t = th::tab(a, "1 ^2 2 / ^3 3 / ^3");

    const auto row_first = epsilon_insert(t, Parity::even, parse_letter(a, "1"));
    c.require(row_first.tableau == th::tab(a, "1 1 ^2 / 2 ^3 / ^3 3"),
              "row-first insertion tableau: " + show(row_first.tableau));
    c.require(row_first.trace.bumped_nodes == nodes_of("(1,2)(1,3)(2,1)(2,2)(3,2)"),
              "row-first insertion visited " + detail::brief_nodes(row_first.trace.bumped_nodes));
    c.require(row_first.trace.bumped_letters == letters_of("1 ^2 2 ^3 3"),
              "row-first insertion moved the wrong letters");

    const auto col_first = epsilon_insert(t, Parity::odd, parse_letter(a, "1"));
    c.require(col_first.tableau == th::tab(a, "1 1 2 / ^2 3 / ^3 / ^3"),
              "column-first insertion tableau: " + show(col_first.tableau));
    c.require(col_first.trace.bumped_nodes == nodes_of("(1,1)(1,2)(2,1)(3,1)(4,1)"),
              "column-first insertion visited " + detail::brief_nodes(col_first.trace.bumped_nodes));
    c.require(col_first.trace.bumped_letters == letters_of("1 1 ^2 ^3 ^3"),
              "column-first insertion moved the wrong letters");

    const auto row_ext = epsilon_extract(t, Parity::even, Node{3, 1});
    c.require(row_ext.tableau == th::tab(a, "1 ^2 2 / ^3 3"),
              "row-mode extraction tableau: " + show(row_ext.tableau));
    c.require(row_ext.trace.unbumped_nodes == nodes_of("(3,1)") &&
                  row_ext.trace.unbumped_letters == letters_of("^3") &&
                  row_ext.trace.extracted_letter() == parse_letter(a, "^3"),
              "row-mode extraction walk is wrong");

    const auto col_ext = epsilon_extract(t, Parity::odd, Node{3, 1});
    c.require(col_ext.tableau == th::tab(a, "1 2 ^3 / ^3 3"),
              "column-mode extraction tableau: " + show(col_ext.tableau));
    c.require(col_ext.trace.unbumped_nodes == nodes_of("(3,1)(2,1)(1,3)(1,2)") &&
                  col_ext.trace.unbumped_letters == letters_of("^3 ^3 2 ^2") &&
                  col_ext.trace.extracted_letter() == parse_letter(a, "^2"),
              "column-mode extraction walk is wrong");

    const auto w = th::bw(a, a, "^3 ^1 / 1 ^2 / 2 2 / 3 2 / ^3 ^3 / ^3 ^3 / ^2 3 / ^1 3");
    const auto rsk = srsk::srsk(w);
    c.require(rsk.insertion_tableau == th::tab(a, "^1 ^2 ^3 3 / 1 2 ^3 / ^3"),
              "running-example insertion tableau: " + show(rsk.insertion_tableau));
    c.require(rsk.recording_tableau == th::tab(a, "^1 2 2 ^3 / ^2 3 3 / ^3"),
              "running-example recording tableau: " + show(rsk.recording_tableau));

    const auto winv = invert(w);
    c.require(winv == th::bw(a, a, "3 ^1 / ^2 1 / 3 ^2 / 2 2 / ^3 ^3 / ^3 ^3 / ^1 ^3 / 2 3"),
              "inverted running example: " + detail::brief_biword(a, a, winv));
    const auto rsk_inv = srsk::srsk(winv);
    c.require(rsk_inv.insertion_tableau == rsk.recording_tableau &&
                  rsk_inv.recording_tableau == rsk.insertion_tableau,
              "inverted running example should swap the two tableaux");
}

// --- criteria run through the verification harness ---

void run_harness_check(Criterion& c, const std::string& check, const Alphabet& x,
                       const Alphabet& y, const VerifyOptions& opt) {
    const auto report = run_verify(check, x, y, opt);
    c.require(report.instances > 0, check + ": no instances examined");
    if (report.passed()) return;
    c.fail(check + ": " + std::to_string(report.failures_total) + " failure(s)");
    for (const auto& f : report.failures)
        c.fail("  " + f.instance + " | " + f.law + " | " + f.observed);
}

// --- criterion 4: walk guarantees, exhaustive then randomized ---

void run_walk_suite(Criterion& c) {
    VerifyOptions opt;
    opt.max_cells = 5;
    opt.max_len = 3;
    opt.threads = hardware_threads();
    for (const char* check : {"semistandard-preservation", "insert-extract-inverse",
                              "dual-conjugate-laws", "standardization-commutation",
                              "node-containment", "added-node-order"})
        run_harness_check(c, check, a6(), a6(), opt);

    // Walk-shape guarantees on every insertion at <= 5 cells.
    std::uint64_t walks = 0;
    for (const auto& t : semistandard_tableaux_up_to(a6(), 5)) {
        for (Parity eps : {Parity::even, Parity::odd}) {
            for (const Letter& x : a6().letters()) {
                const auto ins = epsilon_insert(t, eps, x);
                ++walks;
                const std::string instance =
                    "insert " + format_letter(a6(), x) + " (" + detail::eps_name(eps) + ") into " +
                    show(t);
                if (auto v = tc::monotone_walk_violation(t, eps, ins)) c.fail(instance + ": " + *v);
                for (Parity delta : {Parity::even, Parity::odd})
                    if (auto v = tc::level_chain_violation(t, eps, ins, delta))
                        c.fail(instance + ": " + *v);
                if (auto stats = tc::stair_check(ins); stats.violation)
                    c.fail(instance + ": " + *stats.violation);

                const auto part = ne_sw_partition(t, eps, x);
                c.require(part.northeast.size() + part.southwest.size() == part.universe.size(),
                          instance + ": region partition misses nodes");
                for (const Node& u : part.universe)
                    c.require(part.in_northeast(u) != part.in_southwest(u),
                              instance + ": region overlap at " + to_string(u));
            }
        }
    }
    c.require(walks > 0, "exhaustive walk sweep examined nothing");

    // The staircase hypothesis needs walks bigger than 5 cells allow, so
    // stress it on seeded random growth sequences as well.
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> pick_letter(0, a6().size() - 1);
    std::uniform_int_distribution<int> pick_eps(0, 1);
    std::uint64_t staircases = 0;
    for (int run = 0; run < 400; ++run) {
        Tableau<Letter> t;
        for (int step = 0; step < 16; ++step) {
            const Letter x = a6().letter(pick_letter(rng));
            const Parity eps = pick_eps(rng) ? Parity::odd : Parity::even;
            const auto ins = epsilon_insert(t, eps, x);
            const std::string instance = "random insert " + format_letter(a6(), x) + " (" +
                                         detail::eps_name(eps) + ") into " + show(t);
            if (auto v = tc::monotone_walk_violation(t, eps, ins)) c.fail(instance + ": " + *v);
            for (Parity delta : {Parity::even, Parity::odd})
                if (auto v = tc::level_chain_violation(t, eps, ins, delta))
                    c.fail(instance + ": " + *v);
            const auto stats = tc::stair_check(ins);
            staircases += stats.triples;
            if (stats.violation) c.fail(instance + ": " + *stats.violation);
            t = ins.tableau;
        }
    }
    c.require(staircases > 0, "randomized stress never exercised the staircase hypothesis");
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    {
        Criterion c{1, "worked examples reproduce the frozen walks, tableaux, and inversion"};
        run_worked_examples(c);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{2, "length-limited correspondence is a shape/content-exact bijection"};
        VerifyOptions opt; // single-threaded on purpose: the bound is cheap
        opt.max_len = 4;
        run_harness_check(c, "bijection", a4(), a4(), opt);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{3, "inverting a biword swaps the produced tableau pair"};
        VerifyOptions opt;
        opt.max_len = 4;
        opt.threads = hardware_threads();
        run_harness_check(c, "symmetry", a4(), a4(), opt);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{4, "insertion-walk guarantees hold exhaustively at small size"};
        run_walk_suite(c);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{5, "all-even alphabets reproduce classical row insertion"};
        VerifyOptions opt;
        opt.max_len = 4;
        opt.threads = hardware_threads();
        run_harness_check(c, "classical-agreement", th::alpha("1 2 3"), th::alpha("1 2 3"), opt);
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{6, "standardization commutes with inversion and the correspondence"};
        VerifyOptions opt;
        opt.max_len = 4;
        opt.threads = hardware_threads();
        run_harness_check(c, "biword-standardization", a4(), a4(), opt);
        criteria.push_back(std::move(c));
    }

    int failures = 0;
    for (const auto& c : criteria) {
        std::printf("[%s] %d. %s\n", c.passed ? "PASS" : "FAIL", c.number, c.description.c_str());
        if (!c.passed) {
            ++failures;
            for (const auto& d : c.details) std::printf("       %s\n", d.c_str());
        }
    }
    return failures == 0 ? 0 : 1;
}
