#pragma once

// Batch commands behind the reachkit executable. Each command writes a JSON
// report (or the requested artifact) to `out`, diagnostics to `err`, and
// returns the process exit code:
//   0 ok, 1 input error, 2 resource guard hit, 3 certification failure.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "codes.hpp"
#include "gadgets.hpp"
#include "io.hpp"
#include "matrices.hpp"
#include "oracles.hpp"
#include "random.hpp"

namespace reachkit::cli {

enum ExitCode : int { ok = 0, input_error = 1, resource_error = 2, certification_error = 3 };

inline const std::vector<std::string>& all_checks() {
    static const std::vector<std::string> names{"dfa",      "total-dfa",   "strongly-connected", "period", "2-image-bounded",
                                                "complete", "unambiguous", "sync",               "rank"};
    return names;
}

inline const std::vector<std::string>& all_families() {
    static const std::vector<std::string> names{"layered", "intro-complete", "intro-sync", "sync", "complete", "unambiguous"};
    return names;
}

struct AnalyzeOptions {
    std::string path;
    std::vector<std::string> checks;  ///< empty = every check except rank
    bool force = false;
    std::size_t max_states = 22;
};

struct GenerateOptions {
    std::string family;
    std::optional<std::string> source;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> size;
    std::string out;
};

struct VerifyOptions {
    std::string automaton;
    std::optional<std::string> metadata;  ///< defaults to the sidecar path of `automaton`
    std::size_t max_states = oracles::default_max_states;
};

struct ConvertOptions {
    std::string mode;  ///< matrix-to-nfa, nfa-to-matrix, binarize, dot
    std::string in;
    std::optional<std::string> out;  ///< stdout when absent
    std::string format = "json";     ///< json or dot, for automaton outputs
};

/// "x.json" -> "x.meta.json"; other names get ".meta.json" appended.
inline std::string sidecar_path(const std::string& path) {
    const std::string ext = ".json";
    if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
        return path.substr(0, path.size() - ext.size()) + ".meta.json";
    return path + ".meta.json";
}

/// Runs `body`, mapping library exceptions to exit codes.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return resource_error;
    } catch (const CertificationError& e) {
        err << e.what() << "\n";
        return certification_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
}

/// Automaton JSON, or a matrix set read through its positivity pattern.
inline Nfa load_automaton(const std::string& path) {
    Json j = read_json_file(path);
    if (j.is_object() && j.contains("dim")) return to_nfa(matrices_from_json(j));
    return nfa_from_json(j);
}

namespace detail {

inline Json word_or_null(const std::optional<Word>& w) { return w ? Json(format_word(*w)) : Json(nullptr); }

inline Json not_applicable(const std::string& reason) { return {{"applicable", false}, {"reason", reason}}; }

inline Json run_check(const std::string& check, const Nfa& a, const AnalyzeOptions& opts) {
    if (check == "dfa") return {{"verdict", is_dfa(a)}};
    if (check == "total-dfa") return {{"verdict", is_total_dfa(a)}};
    if (check == "strongly-connected") return {{"verdict", is_strongly_connected(a)}};
    if (check == "period") return {{"value", period(a)}};
    if (check == "2-image-bounded") {
        auto r = image_bound_check(a, 2);
        Json j{{"verdict", r.bounded}};
        if (!r.bounded) {
            j["state"] = *r.state;
            j["witness"] = format_word(r.word);
        }
        return j;
    }
    if (check == "complete") {
        auto r = is_complete(a, {opts.force, opts.max_states});
        return {{"verdict", r.complete}, {"witness", word_or_null(r.mortal_word)}, {"method", r.method}};
    }
    if (check == "unambiguous") {
        auto r = is_unambiguous(a);
        Json j{{"verdict", r.unambiguous}, {"witness", nullptr}};
        if (r.diamond) {
            j["witness"] = format_word(r.diamond->word);
            j["from"] = r.diamond->p;
            j["to"] = r.diamond->q;
            j["split"] = r.diamond->split;
            j["middle"] = {r.diamond->t1, r.diamond->t2};
        }
        return j;
    }
    if (check == "sync") {
        if (!is_total_dfa(a)) return not_applicable("not a total DFA");
        auto r = is_synchronising(a);
        return {{"verdict", r.synchronising}, {"witness", word_or_null(r.reset_word)}};
    }
    if (check == "rank") {
        if (!is_total_dfa(a)) return not_applicable("not a total DFA");
        return {{"value", oracles::rank(a, opts.force ? a.num_states() : opts.max_states)}};
    }
    throw InputError("unknown check \"" + check + "\"");
}

}  // namespace detail

inline int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<std::string> checks = opts.checks;
        if (checks.empty()) checks.assign(all_checks().begin(), all_checks().end() - 1);
        for (const auto& c : checks)
            if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end()) throw InputError("unknown check \"" + c + "\"");
        const Nfa a = load_automaton(opts.path);
        Json results = Json::object();
        for (const auto& c : checks) results[c] = detail::run_check(c, a, opts);
        Json report{{"path", opts.path}, {"states", a.num_states()}, {"letters", a.num_letters()}, {"results", std::move(results)}};
        out << report.dump(2) << "\n";
        return ok;
    });
}

namespace detail {

// Source of a constrained family: the instance itself when it carries n,
// otherwise the layered reduction of the (s, t)-reachability question.
inline ConstrainedInstance constrained_source(const GadgetParams& p) {
    if (p.n) return {p.graph, p.s, p.t, *p.n};
    return layered_reduction(p.graph, p.s, p.t);
}

}  // namespace detail

inline int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto& fams = all_families();
        if (std::find(fams.begin(), fams.end(), opts.family) == fams.end()) throw InputError("unknown family \"" + opts.family + "\"");
        if (opts.source.has_value() == (opts.seed.has_value() || opts.size.has_value()))
            throw InputError("generate: give either --source or both --seed and --size");
        if (!opts.source && !(opts.seed && opts.size)) throw InputError("generate: random mode needs both --seed and --size");
        if (opts.size && *opts.size == 0) throw InputError("generate: --size must be positive");
        const bool constrained_family = opts.family == "sync" || opts.family == "complete" || opts.family == "unambiguous";

        GadgetParams src;
        if (opts.source) {
            src = reachability_from_json(read_json_file(*opts.source));
        } else {
            Rng rng(*opts.seed);
            if (constrained_family) {
                auto inst = random_constrained_instance(rng, *opts.size);
                src = {inst.graph, inst.s, inst.t, inst.n};
            } else {
                auto r = random_acyclic_digraph(rng, *opts.size);
                src = {r.graph, r.s, r.t, std::nullopt};
            }
        }

        const std::string meta_path = sidecar_path(opts.out);
        Json summary{{"family", opts.family}, {"out", opts.out}, {"metadata", meta_path}};
        if (opts.family == "layered") {
            auto inst = layered_reduction(src.graph, src.s, src.t);
            const bool path = reachable(src.graph, src.s)[src.t];
            Json params = to_json(src.graph);
            params["s"] = src.s;
            params["t"] = src.t;
            Json meta{{"family", "layered"}, {"path_exists", path}, {"shortcut_exists", shortcut_exists(inst)}, {"params", std::move(params)}};
            write_json_file(opts.out, to_json(inst));
            write_json_file(meta_path, meta);
            summary["vertices"] = inst.graph.num_vertices();
            summary["shortcut_exists"] = meta["shortcut_exists"];
        } else {
            GadgetInstance g;
            if (opts.family == "intro-complete") g = intro_dfa_completeness_gadget(src.graph, src.s, src.t);
            else if (opts.family == "intro-sync") g = intro_sync_gadget(src.graph, src.s, src.t);
            else if (opts.family == "sync") g = sync_gadget(detail::constrained_source(src));
            else if (opts.family == "complete") g = completeness_gadget(detail::constrained_source(src));
            else g = unambiguity_gadget(detail::constrained_source(src));
            write_json_file(opts.out, to_json(g.automaton));
            write_json_file(meta_path, metadata_json(g));
            summary["states"] = g.automaton.num_states();
            summary["property"] = g.ground_truth.property;
            summary["ground_truth"] = g.ground_truth.value;
        }
        out << summary.dump(2) << "\n";
        return ok;
    });
}

inline int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const std::string meta_path = opts.metadata.value_or(sidecar_path(opts.automaton));
        const Json meta = read_json_file(meta_path);
        const Json body = read_json_file(opts.automaton);
        Json checks = Json::array();
        bool all = true;
        auto record = [&](const std::string& claim, bool passed, const std::string& detail) {
            checks.push_back({{"claim", claim}, {"passed", passed}, {"detail", detail}});
            all = all && passed;
        };

        if (meta.is_object() && meta.value("family", "") == "layered") {
            ConstrainedInstance inst{digraph_from_json(body), ::reachkit::detail::field<Vertex>(body, "s", "digraph"), ::reachkit::detail::field<Vertex>(body, "t", "digraph"),
                                     ::reachkit::detail::field<std::size_t>(body, "n", "digraph")};
            auto src = reachability_from_json(meta.at("params"));
            auto report = verify_promises(inst);
            record("promises", report.all(), report.all() ? "" : report.failures());
            const bool path = reachable(src.graph, src.s)[src.t];
            const bool shortcut = report.acyclic && shortcut_exists(inst);
            record("path-iff-shortcut", path == shortcut, "path " + std::string(path ? "exists" : "absent") + ", shortcut " + (shortcut ? "exists" : "absent"));
            record("metadata", ::reachkit::detail::field<bool>(meta, "path_exists", "metadata") == path &&
                                   ::reachkit::detail::field<bool>(meta, "shortcut_exists", "metadata") == shortcut,
                   "recorded flags");
        } else {
            const GadgetInstance g = gadget_from_json(body, meta);
            for (const auto& c : verify_gadget(g, opts.max_states).checks) record(c.claim, c.passed, c.detail);
        }
        Json report{{"ok", all}, {"checks", std::move(checks)}};
        out << report.dump(2) << "\n";
        if (!all) {
            for (const auto& c : report["checks"])
                if (!c["passed"].get<bool>()) {
                    err << "certification failed: " << c["claim"].get<std::string>() << "\n";
                    break;
                }
            return certification_error;
        }
        return ok;
    });
}

inline int cmd_convert(const ConvertOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.format != "json" && opts.format != "dot") throw InputError("unknown format \"" + opts.format + "\"");
        const Json in = read_json_file(opts.in);
        const bool is_matrix = in.is_object() && in.contains("dim");
        const bool is_digraph = in.is_object() && in.contains("vertices");
        std::string text;
        auto emit_automaton = [&](const Nfa& a) { text = opts.format == "dot" ? to_dot(a) : to_json(a).dump(2) + "\n"; };
        if (opts.mode == "matrix-to-nfa") {
            if (!is_matrix) throw InputError("matrix-to-nfa: input is not a matrix set");
            emit_automaton(to_nfa(matrices_from_json(in)));
        } else if (opts.mode == "nfa-to-matrix") {
            if (is_matrix || is_digraph) throw InputError("nfa-to-matrix: input is not an automaton");
            text = to_json(from_nfa(nfa_from_json(in))).dump(2) + "\n";
        } else if (opts.mode == "binarize") {
            if (is_digraph) throw InputError("binarize: input is not an automaton");
            emit_automaton(binarize(is_matrix ? to_nfa(matrices_from_json(in)) : nfa_from_json(in)));
        } else if (opts.mode == "dot") {
            if (is_digraph) text = to_dot(digraph_from_json(in));
            else text = to_dot(is_matrix ? to_nfa(matrices_from_json(in)) : nfa_from_json(in));
        } else {
            throw InputError("unknown convert mode \"" + opts.mode + "\"");
        }
        if (opts.out) write_text_file(*opts.out, text);
        else out << text;
        return ok;
    });
}

}  // namespace reachkit::cli
