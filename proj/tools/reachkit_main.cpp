#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reachkit/cli.hpp"

namespace {

std::vector<std::string> split_checks(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace reachkit::cli;
    CLI::App app{"Reachability analysis of semi-automata, gadget generation and certification"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    std::string checks;
    auto* a = app.add_subcommand("analyze", "Run analysis checks on an automaton or matrix set");
    a->add_option("path", analyze.path, "automaton or matrix JSON")->required();
    a->add_option("--checks", checks, "comma-separated subset of: dfa,total-dfa,strongly-connected,period,2-image-bounded,complete,unambiguous,sync,rank");
    a->add_flag("--force", analyze.force, "lift the state guard of exponential fallbacks");
    a->add_option("--max-states", analyze.max_states, "state guard for exponential fallbacks");

    GenerateOptions generate;
    std::vector<std::uint64_t> random_pair;
    auto* g = app.add_subcommand("generate", "Build a reduction instance with its ground-truth sidecar");
    g->add_option("family", generate.family, "layered, intro-complete, intro-sync, sync, complete or unambiguous")->required();
    g->add_option("--source", generate.source, "digraph JSON (s, t and optionally n)");
    g->add_option("--random", random_pair, "SEED SIZE")->expected(2);
    g->add_option("--seed", generate.seed, "random seed");
    g->add_option("--size", generate.size, "vertices of the random source graph");
    g->add_option("--out", generate.out, "output path; metadata goes next to it as *.meta.json")->required();

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Re-certify a generated instance with exhaustive oracles");
    v->add_option("automaton", verify.automaton, "generated automaton JSON")->required();
    v->add_option("metadata", verify.metadata, "metadata sidecar (default: next to the automaton)");
    v->add_option("--max-states", verify.max_states, "oracle state guard");

    ConvertOptions convert;
    auto* c = app.add_subcommand("convert", "Convert between matrices, automata, binary encodings and DOT");
    c->add_option("mode", convert.mode, "matrix-to-nfa, nfa-to-matrix, binarize or dot")->required();
    c->add_option("in", convert.in, "input JSON")->required();
    c->add_option("--out", convert.out, "output path (default: stdout)");
    c->add_option("--format", convert.format, "json or dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    if (*a) {
        analyze.checks = split_checks(checks);
        return cmd_analyze(analyze, std::cout, std::cerr);
    }
    if (*g) {
        if (!random_pair.empty()) {
            generate.seed = random_pair[0];
            generate.size = static_cast<std::size_t>(random_pair[1]);
        }
        return cmd_generate(generate, std::cout, std::cerr);
    }
    if (*v) return cmd_verify(verify, std::cout, std::cerr);
    return cmd_convert(convert, std::cout, std::cerr);
}
