#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "combproof/dot.hpp"
#include "combproof/json_io.hpp"
#include "combproof/synth.hpp"
#include "combproof/transform.hpp"

namespace {

using namespace combproof;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;   // not a tautology / invalid proof
constexpr int kExitUsage = 2;      // usage, parse or malformed input
constexpr int kExitResource = 3;   // configured limit exceeded

struct Options {
    std::string input;
    std::string format = "text";
    int max_vars = kDefaultMaxVars;
    std::size_t max_clauses = kDefaultMaxClauses;
    bool also_dot = false;
};

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string read_formula_arg(const std::string& arg) {
    if (arg == "-") return read_stream(std::cin);
    return arg;
}

CombinatorialProof read_proof_arg(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        text = read_stream(std::cin);
    } else {
        std::ifstream file(arg);
        if (!file) throw Error("cannot open file '" + arg + "'");
        text = read_stream(file);
    }
    return proof_from_json(nlohmann::json::parse(text));
}

int cmd_parse(const Options& opt) {
    std::cout << print(parse_proposition(read_formula_arg(opt.input))) << "\n";
    return kExitOk;
}

int cmd_taut(const Options& opt) {
    Prop phi = parse_proposition(read_formula_arg(opt.input));
    bool brute = is_tautology_bruteforce(phi, opt.max_vars);
    bool clausal = graph_is_true(graph_of(phi), opt.max_clauses);
    std::cout << "bruteforce: " << (brute ? "true" : "false") << "\n";
    std::cout << "clauses: " << (clausal ? "true" : "false") << "\n";
    if (brute != clausal)
        throw InternalInvariantBroken("tautology engines disagree");
    return brute ? kExitOk : kExitSemantic;
}

int cmd_graph(const Options& opt) {
    LabelledGraph g = graph_of(parse_proposition(read_formula_arg(opt.input)));
    if (opt.format == "dot")
        std::cout << to_dot(g);
    else
        std::cout << to_json(g).dump(2) << "\n";
    return kExitOk;
}

int cmd_clauses(const Options& opt) {
    LabelledGraph g = graph_of(parse_proposition(read_formula_arg(opt.input)));
    auto all = clauses(g, opt.max_clauses);
    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const Clause& w : all) out.push_back(w);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Clause& w : all) {
            std::cout << "{";
            for (std::size_t i = 0; i < w.size(); ++i)
                std::cout << (i ? "," : "") << w[i];
            std::cout << "}\n";
        }
    }
    return kExitOk;
}

int cmd_prove(const Options& opt) {
    Prop phi = parse_proposition(read_formula_arg(opt.input));
    CombinatorialProof proof;
    try {
        proof = prove(phi, opt.max_clauses);
    } catch (const NotTrue& e) {
        std::cout << "not true\n";
        std::cout << "false clause: {";
        LabelledGraph g = graph_of(phi);
        for (std::size_t i = 0; i < e.false_clause.size(); ++i)
            std::cout << (i ? ", " : "") << e.false_clause[i] << ": "
                      << g.labels.at(e.false_clause[i]).text();
        std::cout << "}\n";
        return kExitSemantic;
    }
    if (opt.format == "dot") {
        std::cout << to_dot(proof);
    } else {
        std::cout << to_json(proof).dump(2) << "\n";
        if (opt.also_dot) std::cout << to_dot(proof);
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    CombinatorialProof proof = read_proof_arg(opt.input);
    auto violations = verify(proof);
    if (violations.empty()) {
        std::cout << "OK\n";
        return kExitOk;
    }
    for (const Violation& violation : violations)
        std::cout << describe(violation) << "\n";
    return kExitSemantic;
}

int cmd_dot(const Options& opt) {
    // a proof file when the argument names one, a formula otherwise
    if (opt.input == "-" || std::ifstream(opt.input).good()) {
        std::cout << to_dot(read_proof_arg(opt.input));
    } else {
        std::cout << to_dot(graph_of(parse_proposition(opt.input)));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial proofs for classical propositional logic"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, const char* input_name, const char* input_help) {
        sub->add_option(input_name, opt.input, input_help)->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--max-vars", opt.max_vars, "brute-force variable cap");
        sub->add_option("--max-clauses", opt.max_clauses, "clause enumeration cap");
        return sub;
    };

    auto* parse_cmd = add_common(app.add_subcommand("parse", "echo the canonical form"),
                                 "formula", "formula or - for stdin");
    auto* taut_cmd = add_common(app.add_subcommand("taut", "check tautology two ways"),
                                "formula", "formula or - for stdin");
    auto* graph_cmd = add_common(app.add_subcommand("graph", "print the graph of a formula"),
                                 "formula", "formula or - for stdin");
    auto* clauses_cmd = add_common(app.add_subcommand("clauses", "print the clause sets"),
                                   "formula", "formula or - for stdin");
    auto* prove_cmd = add_common(app.add_subcommand("prove", "synthesize a combinatorial proof"),
                                 "formula", "formula or - for stdin");
    prove_cmd->add_flag("--dot", opt.also_dot, "also print a DOT rendering");
    auto* verify_cmd = add_common(app.add_subcommand("verify", "check a proof file"),
                                  "proof", "proof JSON file or - for stdin");
    auto* dot_cmd = add_common(app.add_subcommand("dot", "DOT for a proof file or formula"),
                               "input", "proof JSON file, formula, or - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(opt);
        if (taut_cmd->parsed()) return cmd_taut(opt);
        if (graph_cmd->parsed()) return cmd_graph(opt);
        if (clauses_cmd->parsed()) return cmd_clauses(opt);
        if (prove_cmd->parsed()) return cmd_prove(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (dot_cmd->parsed()) return cmd_dot(opt);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
