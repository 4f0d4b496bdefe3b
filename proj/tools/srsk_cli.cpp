// Command-line front end: insertion/extraction walks, the biword
// correspondence and its inverse, biword utilities, the region grid,
// and the exhaustive property verifier.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include <srsk/srsk.hpp>

namespace {

using namespace srsk;

constexpr const char* kDefaultAlgebraAlphabet = "^1 1 ^2 2 ^3 3";
constexpr const char* kDefaultVerifyAlphabet = "^1 1 ^2 2";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Alphabet flags name files; an empty flag falls back to a built-in
// default so the common invocations need no setup.
Alphabet load_alphabet(const std::string& path, const char* fallback) {
    return parse_alphabet(path.empty() ? fallback : read_file(path));
}

Parity to_parity(int eps) { return eps ? Parity::odd : Parity::even; }

Node parse_node(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("node must look like R,C; got '" + text + "'");
    return Node{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

template <LetterKind L>
void print_walk(const Alphabet& a, const std::vector<Node>& nodes,
                const std::vector<L>& letters) {
    std::string line = "trace:";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        line += " " + to_string(nodes[i]) + ":" + format_letter(a, letters[i]);
    std::puts(line.c_str());
}

int cmd_insert(const Alphabet& a, const std::string& tableau_file, int eps,
               const std::string& letter_token) {
    const auto t = parse_tableau(a, read_file(tableau_file));
    const auto ins = epsilon_insert(t, to_parity(eps), parse_letter(a, letter_token));
    std::fputs(format_tableau(a, ins.tableau).c_str(), stdout);
    print_walk(a, ins.trace.bumped_nodes, ins.trace.bumped_letters);
    return 0;
}

int cmd_extract(const Alphabet& a, const std::string& tableau_file, int eps,
                const std::string& node_text) {
    const auto t = parse_tableau(a, read_file(tableau_file));
    const auto ext = epsilon_extract(t, to_parity(eps), parse_node(node_text));
    std::fputs(format_tableau(a, ext.tableau).c_str(), stdout);
    print_walk(a, ext.trace.unbumped_nodes, ext.trace.unbumped_letters);
    std::puts(("extracted: " + format_letter(a, ext.trace.extracted_letter())).c_str());
    return 0;
}

int cmd_rsk(const Alphabet& ax, const Alphabet& ay, const std::string& biword_file, bool json) {
    const auto w = parse_biword(ax, ay, read_file(biword_file));
    const auto result = srsk::srsk(w);
    if (json) {
        nlohmann::json out;
        out["insertion"] = tableau_to_json(ax, result.insertion_tableau);
        out["recording"] = tableau_to_json(ay, result.recording_tableau);
        std::puts(out.dump(2).c_str());
        return 0;
    }
    std::puts("insertion tableau:");
    std::fputs(format_tableau(ax, result.insertion_tableau).c_str(), stdout);
    std::puts("recording tableau:");
    std::fputs(format_tableau(ay, result.recording_tableau).c_str(), stdout);
    return 0;
}

int cmd_unrsk(const Alphabet& ax, const Alphabet& ay, const std::string& left_file,
              const std::string& right_file, bool json) {
    const auto left = parse_tableau(ax, read_file(left_file));
    const auto right = parse_tableau(ay, read_file(right_file));
    const auto w = srsk_inverse(left, right);
    if (json)
        std::puts(biword_to_json(ax, ay, w).dump(2).c_str());
    else
        std::fputs(format_biword(ax, ay, w).c_str(), stdout);
    return 0;
}

int cmd_invert(const Alphabet& ax, const Alphabet& ay, const std::string& biword_file,
               bool json) {
    const auto w = invert(parse_biword(ax, ay, read_file(biword_file)));
    if (json)
        std::puts(biword_to_json(ay, ax, w).dump(2).c_str());
    else
        std::fputs(format_biword(ay, ax, w).c_str(), stdout);
    return 0;
}

int cmd_standardize(const Alphabet& ax, const Alphabet& ay, const std::string& biword_file,
                    bool json) {
    const auto w = canonicalize(parse_biword(ax, ay, read_file(biword_file)));
    const auto ws = standardize_biword(w);
    if (json)
        std::puts(biword_to_json(ax, ay, ws).dump(2).c_str());
    else
        std::fputs(format_biword(ax, ay, ws).c_str(), stdout);
    return 0;
}

int cmd_nesw(const Alphabet& a, const std::string& tableau_file, int eps,
             const std::string& letter_token) {
    const auto t = parse_tableau(a, read_file(tableau_file));
    const auto part = ne_sw_partition(t, to_parity(eps), parse_letter(a, letter_token));
    int max_row = 0;
    for (const Node& u : part.universe) max_row = std::max(max_row, u.row);
    for (int r = 1; r <= max_row; ++r) {
        std::string line;
        for (const Node& u : part.universe) // already in row-major order
            if (u.row == r) {
                if (!line.empty()) line += ' ';
                line += part.in_northeast(u) ? 'N' : 'S';
            }
        std::puts(line.c_str());
    }
    return 0;
}

int cmd_verify(const Alphabet& ax, const Alphabet& ay, const std::string& check,
               const VerifyOptions& opt) {
    std::vector<VerifyReport> reports;
    if (check == "all")
        reports = run_verify_all(ax, ay, opt);
    else
        reports.push_back(run_verify(check, ax, ay, opt));
    bool all_passed = true;
    for (const auto& r : reports) {
        std::fputs(format_report(r).c_str(), stdout);
        all_passed = all_passed && r.passed();
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"super RSK toolkit: two-parameter insertion on parity-graded alphabets"};
    app.require_subcommand(1);

    std::string alphabet_file, alphabet_x_file, alphabet_y_file;
    std::string tableau_file, biword_file, left_file, right_file;
    std::string letter_token, node_text, check = "all";
    int eps = 0;
    bool json = false;
    VerifyOptions opt;

    const auto add_alphabet = [&](CLI::App* cmd) {
        cmd->add_option("--alphabet", alphabet_file, "alphabet file (tokens, '^' = odd)");
    };
    const auto add_alphabets_xy = [&](CLI::App* cmd) {
        cmd->add_option("--alphabet-x", alphabet_x_file, "left alphabet file");
        cmd->add_option("--alphabet-y", alphabet_y_file, "right alphabet file");
    };
    const auto add_eps = [&](CLI::App* cmd) {
        cmd->add_option("--eps", eps, "parameter: 0 starts on a row, 1 on a column")
            ->required()
            ->check(CLI::Range(0, 1));
    };

    auto* insert = app.add_subcommand("insert", "insert a letter and print the walk");
    insert->add_option("--tableau", tableau_file, "tableau file")->required();
    add_eps(insert);
    insert->add_option("--letter", letter_token, "letter token")->required();
    add_alphabet(insert);

    auto* extract = app.add_subcommand("extract", "extract from a removable node");
    extract->add_option("--tableau", tableau_file, "tableau file")->required();
    add_eps(extract);
    extract->add_option("--node", node_text, "removable node R,C")->required();
    add_alphabet(extract);

    auto* rsk = app.add_subcommand("rsk", "map a restricted biword to its tableau pair");
    rsk->add_option("--biword", biword_file, "biword file")->required();
    add_alphabets_xy(rsk);
    rsk->add_flag("--json", json, "emit JSON");

    auto* unrsk = app.add_subcommand("unrsk", "recover the biword from a tableau pair");
    unrsk->add_option("--left", left_file, "insertion tableau file")->required();
    unrsk->add_option("--right", right_file, "recording tableau file")->required();
    add_alphabets_xy(unrsk);
    unrsk->add_flag("--json", json, "emit JSON");

    auto* invert_cmd = app.add_subcommand("invert", "swap the two sides of a biword");
    invert_cmd->add_option("--biword", biword_file, "biword file")->required();
    add_alphabets_xy(invert_cmd);
    invert_cmd->add_flag("--json", json, "emit JSON");

    auto* standardize = app.add_subcommand("standardize", "superscript a biword");
    standardize->add_option("--biword", biword_file, "biword file")->required();
    add_alphabets_xy(standardize);
    standardize->add_flag("--json", json, "emit JSON");

    auto* nesw = app.add_subcommand("nesw", "print the N/S region of each node");
    nesw->add_option("--tableau", tableau_file, "tableau file")->required();
    add_eps(nesw);
    nesw->add_option("--letter", letter_token, "letter token")->required();
    add_alphabet(nesw);

    auto* verify = app.add_subcommand("verify", "run a property check over small instances");
    verify->add_option("--check", check, "check name or 'all'");
    add_alphabets_xy(verify);
    verify->add_option("--max-len", opt.max_len, "biword length bound")->check(CLI::Range(0, 32));
    verify->add_option("--max-cells", opt.max_cells, "tableau cell bound")
        ->check(CLI::Range(0, 32));
    verify->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(insert))
            return cmd_insert(load_alphabet(alphabet_file, kDefaultAlgebraAlphabet), tableau_file,
                              eps, letter_token);
        if (app.got_subcommand(extract))
            return cmd_extract(load_alphabet(alphabet_file, kDefaultAlgebraAlphabet), tableau_file,
                               eps, node_text);
        if (app.got_subcommand(rsk))
            return cmd_rsk(load_alphabet(alphabet_x_file, kDefaultAlgebraAlphabet),
                           load_alphabet(alphabet_y_file, kDefaultAlgebraAlphabet), biword_file,
                           json);
        if (app.got_subcommand(unrsk))
            return cmd_unrsk(load_alphabet(alphabet_x_file, kDefaultAlgebraAlphabet),
                             load_alphabet(alphabet_y_file, kDefaultAlgebraAlphabet), left_file,
                             right_file, json);
        if (app.got_subcommand(invert_cmd))
            return cmd_invert(load_alphabet(alphabet_x_file, kDefaultAlgebraAlphabet),
                              load_alphabet(alphabet_y_file, kDefaultAlgebraAlphabet), biword_file,
                              json);
        if (app.got_subcommand(standardize))
            return cmd_standardize(load_alphabet(alphabet_x_file, kDefaultAlgebraAlphabet),
                                   load_alphabet(alphabet_y_file, kDefaultAlgebraAlphabet),
                                   biword_file, json);
        if (app.got_subcommand(nesw))
            return cmd_nesw(load_alphabet(alphabet_file, kDefaultAlgebraAlphabet), tableau_file,
                            eps, letter_token);
        if (app.got_subcommand(verify))
            return cmd_verify(load_alphabet(alphabet_x_file, kDefaultVerifyAlphabet),
                              load_alphabet(alphabet_y_file, kDefaultVerifyAlphabet), check, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
