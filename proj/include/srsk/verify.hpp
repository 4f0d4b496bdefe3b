#pragma once

// Exhaustive small-bound verification of the correspondence and the
// laws behind it. Each named check enumerates every instance within the
// given bounds, evaluates the law, and reports counterexamples as
// replayable text (the same formats the file readers accept).
//
// Checks split into independent tasks so they can run on several
// threads; results merge in task order, so reports are deterministic
// for a fixed input regardless of thread count.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "srsk/bump_geometry.hpp"
#include "srsk/classical_rsk.hpp"
#include "srsk/enumerate.hpp"
#include "srsk/io.hpp"
#include "srsk/rsk.hpp"

namespace srsk {

struct VerifyOptions {
    int max_len = 4;   // biword length bound
    int max_cells = 4; // tableau cell bound
    int threads = 1;
    std::size_t max_failures = 8; // witnesses kept per check
};

struct VerifyFailure {
    std::string instance; // replayable description of the input
    std::string law;      // what should have held
    std::string observed; // what happened instead
};

struct VerifyReport {
    std::string check;
    std::string alphabet_x;
    std::string alphabet_y;
    VerifyOptions options;
    std::uint64_t instances = 0;
    std::uint64_t failures_total = 0;
    std::vector<VerifyFailure> failures; // capped at options.max_failures
    std::vector<std::string> notes;
    double seconds = 0.0;

    bool passed() const { return failures_total == 0; }
};

inline const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {
        "bijection",
        "symmetry",
        "semistandard-preservation",
        "insert-extract-inverse",
        "dual-conjugate-laws",
        "standardization-commutation",
        "node-containment",
        "added-node-order",
        "biword-standardization",
        "classical-agreement",
    };
    return names;
}

namespace detail {

struct TaskResult {
    std::uint64_t instances = 0;
    std::vector<VerifyFailure> failures;

    void fail(std::string instance, std::string law, std::string observed) {
        failures.push_back(VerifyFailure{std::move(instance), std::move(law), std::move(observed)});
    }
};

using Task = std::function<void(TaskResult&)>;

inline void run_tasks(std::vector<Task>& tasks, const VerifyOptions& opt, VerifyReport& report) {
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                tasks[i](results[i]);
            } catch (const std::exception& e) {
                results[i].fail("(task aborted)", "no exception", e.what());
            }
        }
    };
    if (opt.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < opt.threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : results) {
        report.instances += r.instances;
        report.failures_total += r.failures.size();
        for (const auto& f : r.failures)
            if (report.failures.size() < opt.max_failures) report.failures.push_back(f);
    }
}

inline std::string shape_key(const Shape& s) {
    std::string out;
    for (int p : s.parts()) out += std::to_string(p) + ",";
    return out;
}

template <LetterKind L>
std::string content_key(const Content<L>& c) {
    std::string out;
    for (const auto& [x, n] : c) {
        if constexpr (std::same_as<L, Letter>)
            out += std::to_string(x.rank) + "x" + std::to_string(n) + ",";
        else
            out += "?";
    }
    return out;
}

// One-line rendering of a tableau for witnesses; rows joined by '/'.
template <LetterKind L>
std::string brief_tableau(const Alphabet& a, const Tableau<L>& t) {
    if (t.shape().empty()) return "(empty)";
    std::string out;
    for (int r = 1; r <= t.shape().rows(); ++r) {
        if (r > 1) out += " / ";
        for (int c = 1; c <= t.shape().row_length(r); ++c) {
            if (c > 1) out += ' ';
            out += format_letter(a, t.at(Node{r, c}));
        }
    }
    return out;
}

template <LetterKind LX, LetterKind LY>
std::string brief_biword(const Alphabet& ax, const Alphabet& ay, const Biword<LX, LY>& w) {
    if (w.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "  ";
        out += format_letter(ax, w[i].x) + " " + format_letter(ay, w[i].y);
    }
    return out;
}

inline std::string brief_nodes(const std::vector<Node>& nodes) {
    std::string out;
    for (Node u : nodes) out += to_string(u);
    return out;
}

inline const char* eps_name(Parity eps) { return is_even(eps) ? "eps=0" : "eps=1"; }

// --- individual checks ---

inline void check_bijection(const Alphabet& X, const Alphabet& Y, const VerifyOptions& opt,
                            VerifyReport& report) {
    // Brute-force census of same-shape tableau pairs, keyed by
    // (content-pair), summed over shapes; computed independently of the
    // correspondence.
    std::map<std::string, std::map<std::string, std::uint64_t>> by_content_x, by_content_y;
    for (const auto& t : semistandard_tableaux_up_to(X, opt.max_len))
        ++by_content_x[content_key(t.content())][shape_key(t.shape())];
    for (const auto& t : semistandard_tableaux_up_to(Y, opt.max_len))
        ++by_content_y[content_key(t.content())][shape_key(t.shape())];

    std::vector<Task> tasks;
    for (int n = 0; n <= opt.max_len; ++n) {
        auto words = restricted_biwords(X, Y, n);
        std::map<std::string, std::vector<Biword<Letter, Letter>>> classes;
        for (auto& w : words)
            classes[content_key(left_content(w)) + "|" + content_key(right_content(w))]
                .push_back(std::move(w));
        std::size_t n_classes = classes.size();
        std::uint64_t n_words = 0;
        for (auto& [key, group] : classes) {
            n_words += group.size();
            tasks.push_back([&X, &Y, &by_content_x, &by_content_y,
                             group = std::move(group)](TaskResult& res) {
                std::set<std::string> images;
                for (const auto& w : group) {
                    ++res.instances;
                    const std::string wtxt = brief_biword(X, Y, w);
                    const auto r = srsk(w);
                    if (r.insertion_tableau.shape() != r.recording_tableau.shape()) {
                        res.fail(wtxt, "output tableaux share a shape", "shapes differ");
                        continue;
                    }
                    if (!is_semistandard(r.insertion_tableau) ||
                        !is_semistandard(r.recording_tableau)) {
                        res.fail(wtxt, "output tableaux semistandard", "not semistandard");
                        continue;
                    }
                    if (content_key(r.insertion_tableau.content()) !=
                            content_key(left_content(w)) ||
                        content_key(r.recording_tableau.content()) !=
                            content_key(right_content(w))) {
                        res.fail(wtxt, "output contents match biword contents", "contents differ");
                        continue;
                    }
                    if (srsk_inverse(r.insertion_tableau, r.recording_tableau) != w) {
                        res.fail(wtxt, "inverse map returns the biword",
                                 "round trip produced a different biword");
                        continue;
                    }
                    images.insert(brief_tableau(X, r.insertion_tableau) + "|" +
                                  brief_tableau(Y, r.recording_tableau));
                }
                if (images.size() != group.size())
                    res.fail(brief_biword(X, Y, group.front()) + " (content class)",
                             "map injective on the content class", "images collide");
                // Census comparison: the class must fill its target set.
                const auto& w0 = group.front();
                const auto kx = content_key(left_content(w0));
                const auto ky = content_key(right_content(w0));
                std::uint64_t expect = 0;
                const auto ix = by_content_x.find(kx);
                const auto iy = by_content_y.find(ky);
                if (ix != by_content_x.end() && iy != by_content_y.end())
                    for (const auto& [shape, cx] : ix->second) {
                        const auto it = iy->second.find(shape);
                        if (it != iy->second.end()) expect += cx * it->second;
                    }
                if (expect != group.size())
                    res.fail(brief_biword(X, Y, w0) + " (content class)",
                             "biword count equals same-shape tableau-pair count",
                             std::to_string(group.size()) + " biwords vs " +
                                 std::to_string(expect) + " tableau pairs");
            });
        }
        report.notes.push_back("length " + std::to_string(n) + ": " + std::to_string(n_words) +
                               " biwords in " + std::to_string(n_classes) + " content classes");
    }
    run_tasks(tasks, opt, report);
}

inline void check_symmetry(const Alphabet& X, const Alphabet& Y, const VerifyOptions& opt,
                           VerifyReport& report) {
    std::vector<Task> tasks;
    for (auto& w : restricted_biwords_up_to(X, Y, opt.max_len)) {
        tasks.push_back([&X, &Y, w = std::move(w)](TaskResult& res) {
            ++res.instances;
            const auto r = srsk(w);
            const auto ri = srsk(invert(w));
            if (ri.insertion_tableau != r.recording_tableau ||
                ri.recording_tableau != r.insertion_tableau)
                res.fail(brief_biword(X, Y, w), "inverting the biword swaps the two tableaux",
                         "swapped pair differs");
        });
    }
    run_tasks(tasks, opt, report);
}

inline void check_semistandard_preservation(const Alphabet& X, const Alphabet& Y,
                                            const VerifyOptions& opt, VerifyReport& report) {
    (void)Y;
    std::vector<Task> tasks;
    for (auto& t : semistandard_tableaux_up_to(X, opt.max_cells)) {
        tasks.push_back([&X, t = std::move(t)](TaskResult& res) {
            for (Parity eps : {Parity::even, Parity::odd}) {
                for (const Letter& x : X.letters()) {
                    ++res.instances;
                    const auto ins = epsilon_insert(t, eps, x);
                    const std::string inst = brief_tableau(X, t) + " <- " + X.token(x.rank) +
                                             " (" + eps_name(eps) + ")";
                    // Replay the walk one bump at a time.
                    Tableau<Letter> step = t;
                    const auto& nodes = ins.trace.bumped_nodes;
                    const auto& letters = ins.trace.bumped_letters;
                    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
                        step.set(nodes[j], letters[j]);
                        if (!is_semistandard(step))
                            res.fail(inst, "every partial bump state semistandard",
                                     "violated after bump " + std::to_string(j + 1));
                    }
                    step.append_cell(nodes.back(), letters.back());
                    if (step != ins.tableau)
                        res.fail(inst, "bump replay reproduces the result", "replay differs");
                    if (!is_semistandard(ins.tableau))
                        res.fail(inst, "insertion result semistandard", "not semistandard");
                }
                for (Node u : t.shape().removable_nodes()) {
                    ++res.instances;
                    const auto ext = epsilon_extract(t, eps, u);
                    const std::string inst = brief_tableau(X, t) + " -> " + to_string(u) + " (" +
                                             eps_name(eps) + ")";
                    Tableau<Letter> step = t;
                    step.remove_cell(u);
                    if (!is_semistandard(step))
                        res.fail(inst, "every partial unbump state semistandard",
                                 "violated after removing the node");
                    const auto& nodes = ext.trace.unbumped_nodes;
                    const auto& letters = ext.trace.unbumped_letters;
                    for (std::size_t k = 1; k < nodes.size(); ++k) {
                        step.set(nodes[k], letters[k - 1]);
                        if (!is_semistandard(step))
                            res.fail(inst, "every partial unbump state semistandard",
                                     "violated after unbump " + std::to_string(k));
                    }
                    if (step != ext.tableau)
                        res.fail(inst, "unbump replay reproduces the result", "replay differs");
                }
            }
        });
    }
    run_tasks(tasks, opt, report);
}

inline void check_insert_extract_inverse(const Alphabet& X, const Alphabet& Y,
                                         const VerifyOptions& opt, VerifyReport& report) {
    (void)Y;
    std::vector<Task> tasks;
    for (auto& t : semistandard_tableaux_up_to(X, opt.max_cells)) {
        tasks.push_back([&X, t = std::move(t)](TaskResult& res) {
            for (Parity eps : {Parity::even, Parity::odd}) {
                for (const Letter& x : X.letters()) {
                    ++res.instances;
                    if (!insert_extract_roundtrip(t, eps, x))
                        res.fail(brief_tableau(X, t) + " <- " + X.token(x.rank) + " (" +
                                     eps_name(eps) + ")",
                                 "extracting at the added node undoes the insertion",
                                 "round trip differs");
                }
                for (Node u : t.shape().removable_nodes()) {
                    ++res.instances;
                    if (!extract_insert_roundtrip(t, eps, u))
                        res.fail(brief_tableau(X, t) + " -> " + to_string(u) + " (" +
                                     eps_name(eps) + ")",
                                 "re-inserting the extracted letter undoes the extraction",
                                 "round trip differs");
                }
            }
        });
    }
    run_tasks(tasks, opt, report);
}

inline std::vector<Node> transposed_nodes(const std::vector<Node>& nodes) {
    std::vector<Node> out;
    out.reserve(nodes.size());
    for (Node u : nodes) out.push_back(transpose(u));
    return out;
}

inline void check_dual_conjugate_laws(const Alphabet& X, const Alphabet& Y,
                                      const VerifyOptions& opt, VerifyReport& report) {
    (void)Y;
    std::vector<Task> tasks;
    for (auto& t : semistandard_tableaux_up_to(X, opt.max_cells)) {
        tasks.push_back([&X, t = std::move(t)](TaskResult& res) {
            const bool standard = is_standard(t);
            std::set<std::int32_t> used;
            for (Node u : t.shape().nodes()) used.insert(t.at(u).rank);

            for (Parity eps : {Parity::even, Parity::odd}) {
                for (const Letter& x : X.letters()) {
                    const std::string inst = brief_tableau(X, t) + " <- " + X.token(x.rank) +
                                             " (" + eps_name(eps) + ")";
                    const auto ins = epsilon_insert(t, eps, x);

                    if (standard && !used.count(x.rank)) {
                        // Conjugating swaps the parameter; bumps transpose.
                        ++res.instances;
                        const auto conj = epsilon_insert(conjugate(t), eps + Parity::odd, x);
                        if (conj.tableau != conjugate(ins.tableau) ||
                            conj.trace.bumped_nodes != transposed_nodes(ins.trace.bumped_nodes))
                            res.fail(inst, "conjugate law (distinct entries)",
                                     "conjugated insertion differs");
                        // Dualizing swaps the parameter; bumps agree.
                        ++res.instances;
                        const auto dl = epsilon_insert(dual(t), eps + Parity::odd, dualize(x));
                        if (dl.tableau != dual(ins.tableau) ||
                            dl.trace.bumped_nodes != ins.trace.bumped_nodes)
                            res.fail(inst, "dual law (distinct entries)",
                                     "dualized insertion differs");
                    }

                    // Conjugate-dual together keeps the parameter; bumps transpose.
                    ++res.instances;
                    const auto cd = epsilon_insert(dual_conjugate(t), eps, dualize(x));
                    if (cd.tableau != dual_conjugate(ins.tableau) ||
                        cd.trace.bumped_nodes != transposed_nodes(ins.trace.bumped_nodes))
                        res.fail(inst, "conjugate-dual insertion law",
                                 "conjugate-dual insertion differs");
                }

                for (Node u : t.shape().removable_nodes()) {
                    ++res.instances;
                    const auto ext = epsilon_extract(t, eps, u);
                    const auto cd = epsilon_extract(dual_conjugate(t), eps, transpose(u));
                    if (cd.tableau != dual_conjugate(ext.tableau) ||
                        cd.trace.unbumped_nodes != transposed_nodes(ext.trace.unbumped_nodes) ||
                        cd.trace.extracted_letter() != dualize(ext.trace.extracted_letter()))
                        res.fail(brief_tableau(X, t) + " -> " + to_string(u) + " (" +
                                     eps_name(eps) + ")",
                                 "conjugate-dual extraction law",
                                 "conjugate-dual extraction differs");
                }
            }
        });
    }
    run_tasks(tasks, opt, report);
}

inline void check_standardization_commutation(const Alphabet& X, const Alphabet& Y,
                                              const VerifyOptions& opt, VerifyReport& report) {
    (void)Y;
    std::vector<Task> tasks;
    for (auto& t : semistandard_tableaux_up_to(X, opt.max_cells)) {
        tasks.push_back([&X, t = std::move(t)](TaskResult& res) {
            std::map<std::int32_t, int> mult;
            for (Node u : t.shape().nodes()) ++mult[t.at(u).rank];

            // Superscript choices beyond multiplicity+1 (and probe
            // superscripts beyond multiplicity+2) only repeat relative
            // orderings already covered.
            for (const auto& u : bullet_standardizations(t, 1)) {
                for (const Letter& base : X.letters()) {
                    const int k = mult.count(base.rank) ? mult[base.rank] : 0;
                    for (int sup = 1; sup <= k + 2; ++sup) {
                        const StdLetter y = with_sup(base, sup);
                        for (Parity eps : {Parity::even, Parity::odd}) {
                            bool admissible = true;
                            for (Node v : u.shape().nodes()) {
                                const StdLetter& e = u.at(v);
                                if (forget(e) != base) continue;
                                const bool ok = is_even(eps + parity_of(y)) ? prec_less(e, y)
                                                                            : prec_less(y, e);
                                if (!ok) {
                                    admissible = false;
                                    break;
                                }
                            }
                            if (!admissible) continue;
                            ++res.instances;
                            const auto fine = epsilon_insert(u, eps, y);
                            const auto coarse = epsilon_insert(t, eps, base);
                            if (fine.trace.bumped_nodes != coarse.trace.bumped_nodes ||
                                !is_bullet_standardization(fine.tableau, coarse.tableau))
                                res.fail(brief_tableau(X, u) + " <- " + X.token(base.rank) + "(" +
                                             std::to_string(sup) + ") (" + eps_name(eps) + ")",
                                         "superscripted insertion standardizes the plain one",
                                         "commutation fails");
                        }
                    }
                }
            }
        });
    }
    run_tasks(tasks, opt, report);
}

inline void check_node_containment_all(const Alphabet& X, const Alphabet& Y,
                                       const VerifyOptions& opt, VerifyReport& report) {
    (void)Y;
    std::vector<Task> tasks;
    for (auto& t : semistandard_tableaux_up_to(X, opt.max_cells)) {
        tasks.push_back([&X, t = std::move(t)](TaskResult& res) {
            for (Parity eps : {Parity::even, Parity::odd})
                for (const Letter& y : X.letters())
                    for (const Letter& z : X.letters()) {
                        ++res.instances;
                        if (!check_node_containment(t, eps, y, z))
                            res.fail(brief_tableau(X, t) + " <- " + X.token(y.rank) + ", " +
                                         X.token(z.rank) + " (" + eps_name(eps) + ")",
                                     "second walk confined to the predicted region",
                                     "region biconditional fails");
                    }
        });
    }
    run_tasks(tasks, opt, report);
}

inline void check_added_node_order_all(const Alphabet& X, const Alphabet& Y,
                                       const VerifyOptions& opt, VerifyReport& report) {
    (void)Y;
    std::vector<Task> tasks;
    for (auto& t : semistandard_tableaux_up_to(X, opt.max_cells)) {
        tasks.push_back([&X, t = std::move(t)](TaskResult& res) {
            for (Parity eps : {Parity::even, Parity::odd})
                for (const Letter& y : X.letters())
                    for (const Letter& z : X.letters()) {
                        ++res.instances;
                        if (!check_added_node_order(t, eps, y, z))
                            res.fail(brief_tableau(X, t) + " <- " + X.token(y.rank) + ", " +
                                         X.token(z.rank) + " (" + eps_name(eps) + ")",
                                     "added nodes ordered northeast iff predicted",
                                     "order biconditional fails");
                    }
        });
    }
    run_tasks(tasks, opt, report);
}

inline void check_biword_standardization(const Alphabet& X, const Alphabet& Y,
                                         const VerifyOptions& opt, VerifyReport& report) {
    std::vector<Task> tasks;
    for (auto& w : restricted_biwords_up_to(X, Y, opt.max_len)) {
        tasks.push_back([&X, &Y, w = std::move(w)](TaskResult& res) {
            ++res.instances;
            const std::string inst = brief_biword(X, Y, w);
            const auto ws = standardize_biword(w);

            std::set<std::pair<std::int32_t, std::int32_t>> seen_x, seen_y;
            for (const auto& b : ws) {
                seen_x.insert({b.x.base.rank, b.x.sup});
                seen_y.insert({b.y.base.rank, b.y.sup});
            }
            if (seen_x.size() != ws.size() || seen_y.size() != ws.size())
                res.fail(inst, "standardized biword is standard", "letters repeat");
            for (const auto& b : ws)
                if (b.x.sup < 1 || b.y.sup < 1 ||
                    b.x.sup > static_cast<std::int32_t>(w.size()) ||
                    b.y.sup > static_cast<std::int32_t>(w.size()))
                    res.fail(inst, "superscripts run 1..multiplicity", "superscript out of range");
            if (!is_ordered(ws) || !is_restricted(ws))
                res.fail(inst, "standardized biword ordered and restricted", "violated");
            if (forget_biword(ws) != canonicalize(w))
                res.fail(inst, "forgetting superscripts restores the biword", "differs");
            if (invert(ws) != standardize_biword(invert(w)))
                res.fail(inst, "standardization commutes with inversion", "differs");

            const auto coarse = srsk(w);
            const auto fine = srsk(ws);
            if (forget_tableau(fine.insertion_tableau) != coarse.insertion_tableau ||
                forget_tableau(fine.recording_tableau) != coarse.recording_tableau)
                res.fail(inst, "superscripted image forgets to the plain image", "differs");
            if (fine.added_nodes() != coarse.added_nodes())
                res.fail(inst, "added-node sequences agree step by step", "differs");
        });
    }
    run_tasks(tasks, opt, report);
}

inline Alphabet even_subalphabet(const Alphabet& a) {
    std::vector<std::string> tokens;
    for (std::size_t r = 0; r < a.size(); ++r)
        if (is_even(a.letter(r).par)) tokens.push_back(a.token(r));
    return Alphabet::from_tokens(tokens);
}

inline void check_classical_agreement(const Alphabet& X, const Alphabet& Y,
                                      const VerifyOptions& opt, VerifyReport& report) {
    // The classical correspondence only speaks about even letters, so
    // restrict both alphabets to their even parts.
    const Alphabet Xe = even_subalphabet(X);
    const Alphabet Ye = even_subalphabet(Y);
    report.notes.push_back("even subalphabets: '" + format_alphabet(Xe) + "' and '" +
                           format_alphabet(Ye) + "'");
    std::vector<Task> tasks;
    for (auto& w : restricted_biwords_up_to(Xe, Ye, opt.max_len)) {
        tasks.push_back([&Xe, &Ye, w = std::move(w)](TaskResult& res) {
            ++res.instances;
            const auto r = srsk(w);
            const auto [oracle_ins, oracle_rec] = classical_rsk_oracle(w);
            if (rank_grid(r.insertion_tableau) != oracle_ins ||
                rank_grid(r.recording_tableau) != oracle_rec)
                res.fail(brief_biword(Xe, Ye, w),
                         "matches row-insertion correspondence on even letters",
                         "tableaux differ from oracle");
        });
    }
    run_tasks(tasks, opt, report);
}

} // namespace detail

inline VerifyReport run_verify(const std::string& check, const Alphabet& X, const Alphabet& Y,
                               const VerifyOptions& opt = {}) {
    VerifyReport report;
    report.check = check;
    report.alphabet_x = format_alphabet(X);
    report.alphabet_y = format_alphabet(Y);
    report.options = opt;
    const auto start = std::chrono::steady_clock::now();

    if (check == "bijection")
        detail::check_bijection(X, Y, opt, report);
    else if (check == "symmetry")
        detail::check_symmetry(X, Y, opt, report);
    else if (check == "semistandard-preservation")
        detail::check_semistandard_preservation(X, Y, opt, report);
    else if (check == "insert-extract-inverse")
        detail::check_insert_extract_inverse(X, Y, opt, report);
    else if (check == "dual-conjugate-laws")
        detail::check_dual_conjugate_laws(X, Y, opt, report);
    else if (check == "standardization-commutation")
        detail::check_standardization_commutation(X, Y, opt, report);
    else if (check == "node-containment")
        detail::check_node_containment_all(X, Y, opt, report);
    else if (check == "added-node-order")
        detail::check_added_node_order_all(X, Y, opt, report);
    else if (check == "biword-standardization")
        detail::check_biword_standardization(X, Y, opt, report);
    else if (check == "classical-agreement")
        detail::check_classical_agreement(X, Y, opt, report);
    else
        throw std::invalid_argument("unknown check '" + check + "'");

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline std::vector<VerifyReport> run_verify_all(const Alphabet& X, const Alphabet& Y,
                                                const VerifyOptions& opt = {}) {
    std::vector<VerifyReport> out;
    for (const auto& name : verify_check_names()) out.push_back(run_verify(name, X, Y, opt));
    return out;
}

inline std::string format_report(const VerifyReport& r) {
    std::string out = "check " + r.check + ": alphabets [" + r.alphabet_x + "] / [" +
                      r.alphabet_y + "], max-len " + std::to_string(r.options.max_len) +
                      ", max-cells " + std::to_string(r.options.max_cells) + ", instances " +
                      std::to_string(r.instances) + ", failures " +
                      std::to_string(r.failures_total) + " (" + std::to_string(r.seconds) +
                      "s) -> " + (r.passed() ? "PASS" : "FAIL") + "\n";
    for (const auto& n : r.notes) out += "  note: " + n + "\n";
    for (const auto& f : r.failures) {
        out += "  counterexample: " + f.instance + "\n";
        out += "    expected: " + f.law + "\n";
        out += "    observed: " + f.observed + "\n";
    }
    return out;
}

} // namespace srsk
