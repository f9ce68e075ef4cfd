#pragma once

// JSON interchange and DOT export.
//
//   automaton  {"states": n, "letters": ["a", "b", ...], "delta": [[[succ, ...] per letter] per state]}
//   digraph    {"vertices": n, "edges": [[u, v], ...], "s": .., "t": .., "n": ..}   (s, t, n optional)
//   matrices   {"dim": n, "matrices": [[[entry, ...] per row] per matrix]}
//   code       ["a", "ba", ...]
//   metadata   {"family", "property", "ground_truth", "shortcut_exists", "witness",
//               "state_names": {"0": tag, ...}, "params": {graph + s, t, n}}

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "codes.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "gadgets.hpp"
#include "matrices.hpp"
#include "nfa.hpp"

namespace reachkit {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text, const std::string& origin = "input") {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

inline void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

namespace detail {

// Reads j[key] as T, turning shape errors into InputError.
template <typename T>
T field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing field \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw InputError(std::string(what) + ": bad field \"" + key + "\": " + e.what());
    }
}

}  // namespace detail

// --- automata ---------------------------------------------------------------

inline Json to_json(const Nfa& nfa) {
    Json delta = Json::array();
    for (State q = 0; q < nfa.num_states(); ++q) {
        Json row = Json::array();
        for (Letter x = 0; x < nfa.num_letters(); ++x) {
            auto succ = nfa.successors(q, x);
            row.push_back(std::vector<State>(succ.begin(), succ.end()));
        }
        delta.push_back(std::move(row));
    }
    Json letters = Json::array();
    for (Letter x = 0; x < nfa.num_letters(); ++x) letters.push_back(letter_name(x));
    return {{"states", nfa.num_states()}, {"letters", std::move(letters)}, {"delta", std::move(delta)}};
}

/// "states" and "letters" may be counts or lists of names; names map to
/// indices in list order.
inline Nfa nfa_from_json(const Json& j) {
    auto count = [&](const char* key) {
        if (j.is_object() && j.contains(key) && j.at(key).is_array()) return j.at(key).size();
        return detail::field<std::size_t>(j, key, "automaton");
    };
    auto n = count("states");
    auto k = count("letters");
    auto delta = detail::field<std::vector<std::vector<std::vector<State>>>>(j, "delta", "automaton");
    return Nfa(n, k, delta);
}

// --- digraphs ---------------------------------------------------------------

inline Json to_json(const Digraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.from, e.to});
    return {{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

inline Json to_json(const ConstrainedInstance& inst) {
    Json j = to_json(inst.graph);
    j["s"] = inst.s;
    j["t"] = inst.t;
    j["n"] = inst.n;
    return j;
}

inline Digraph digraph_from_json(const Json& j) {
    auto n = detail::field<std::size_t>(j, "vertices", "digraph");
    auto edges = detail::field<std::vector<std::pair<Vertex, Vertex>>>(j, "edges", "digraph");
    return Digraph(n, edges);
}

/// Graph with s and t; s defaults to 0 and t to the last vertex.
inline GadgetParams reachability_from_json(const Json& j) {
    GadgetParams p{digraph_from_json(j), 0, 0, std::nullopt};
    p.t = static_cast<Vertex>(p.graph.num_vertices() - 1);
    if (j.contains("s")) p.s = detail::field<Vertex>(j, "s", "digraph");
    if (j.contains("t")) p.t = detail::field<Vertex>(j, "t", "digraph");
    if (j.contains("n")) p.n = detail::field<std::size_t>(j, "n", "digraph");
    p.graph.check_vertex(p.s);
    p.graph.check_vertex(p.t);
    return p;
}

// --- matrices ---------------------------------------------------------------

inline Json to_json(const MatrixSet& ms) { return {{"dim", ms.dim}, {"matrices", ms.matrices}}; }

inline MatrixSet matrices_from_json(const Json& j) {
    MatrixSet ms;
    ms.dim = detail::field<std::size_t>(j, "dim", "matrix set");
    const Json& list = j.at("matrices");
    if (!list.is_array()) throw InputError("matrix set: \"matrices\" must be an array");
    for (const auto& m : list) {
        Matrix mat;
        if (!m.is_array()) throw InputError("matrix set: each matrix must be an array of rows");
        for (const auto& row : m) {
            if (!row.is_array()) throw InputError("matrix set: each row must be an array");
            std::vector<std::uint64_t> r;
            for (const auto& v : row) {
                if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
                    throw InputError("matrix set: entries must be nonnegative integers");
                r.push_back(v.get<std::uint64_t>());
            }
            mat.push_back(std::move(r));
        }
        ms.matrices.push_back(std::move(mat));
    }
    ms.validate();
    return ms;
}

// --- codes ------------------------------------------------------------------

inline Json to_json(const FiniteCodeSample& sample) {
    Json j = Json::array();
    for (const auto& w : sample.words) j.push_back(format_word(w));
    return j;
}

inline FiniteCodeSample code_from_json(const Json& j, std::size_t n_letters) {
    if (!j.is_array()) throw InputError("code sample: expected a list of words");
    FiniteCodeSample s;
    for (const auto& item : j) {
        if (!item.is_string()) throw InputError("code sample: words must be strings");
        Word w = parse_word(item.get<std::string>(), n_letters);
        s.length_bound = std::max(s.length_bound, w.size());
        s.words.insert(std::move(w));
    }
    return s;
}

// --- gadget metadata --------------------------------------------------------

inline Json metadata_json(const GadgetInstance& g) {
    Json names = Json::object();
    for (std::size_t i = 0; i < g.state_names.size(); ++i) names[std::to_string(i)] = g.state_names[i];
    Json params = to_json(g.params.graph);
    params["s"] = g.params.s;
    params["t"] = g.params.t;
    params["n"] = g.params.n ? Json(*g.params.n) : Json(nullptr);
    return {{"family", g.family},
            {"property", g.ground_truth.property},
            {"ground_truth", g.ground_truth.value},
            {"shortcut_exists", g.shortcut_exists},
            {"witness", g.witness ? Json(format_word(*g.witness)) : Json(nullptr)},
            {"state_names", std::move(names)},
            {"params", std::move(params)}};
}

inline GadgetInstance gadget_from_json(const Json& automaton, const Json& meta) {
    GadgetInstance g;
    g.automaton = nfa_from_json(automaton);
    g.family = detail::field<std::string>(meta, "family", "metadata");
    g.ground_truth.property = detail::field<std::string>(meta, "property", "metadata");
    g.ground_truth.value = detail::field<bool>(meta, "ground_truth", "metadata");
    g.shortcut_exists = detail::field<bool>(meta, "shortcut_exists", "metadata");
    if (meta.contains("witness") && !meta.at("witness").is_null())
        g.witness = parse_word(detail::field<std::string>(meta, "witness", "metadata"), g.automaton.num_letters());
    auto names = detail::field<std::map<std::string, std::string>>(meta, "state_names", "metadata");
    g.state_names.assign(g.automaton.num_states(), "");
    for (const auto& [k, v] : names) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(k);
        } catch (const std::exception&) {
            throw InputError("metadata: bad state index \"" + k + "\"");
        }
        if (idx >= g.state_names.size()) throw InputError("metadata: state index " + k + " out of range");
        g.state_names[idx] = v;
    }
    if (!meta.contains("params")) throw InputError("metadata: missing field \"params\"");
    const Json& p = meta.at("params");
    g.params.graph = digraph_from_json(p);
    g.params.s = detail::field<Vertex>(p, "s", "metadata params");
    g.params.t = detail::field<Vertex>(p, "t", "metadata params");
    g.params.graph.check_vertex(g.params.s);
    g.params.graph.check_vertex(g.params.t);
    if (p.contains("n") && !p.at("n").is_null()) g.params.n = detail::field<std::size_t>(p, "n", "metadata params");
    return g;
}

// --- DOT --------------------------------------------------------------------

/// Graphviz text: a solid, b dashed, c dotted, further letters bold; every
/// edge is also labelled with its letter.
inline std::string to_dot(const Nfa& nfa, const std::vector<std::string>& state_names = {}) {
    static const char* styles[] = {"solid", "dashed", "dotted"};
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (State q = 0; q < nfa.num_states(); ++q) {
        out << "  " << q;
        if (q < state_names.size() && !state_names[q].empty()) out << " [label=\"" << state_names[q] << "\"]";
        out << ";\n";
    }
    for (State q = 0; q < nfa.num_states(); ++q)
        for (Letter x = 0; x < nfa.num_letters(); ++x)
            for (State p : nfa.successors(q, x))
                out << "  " << q << " -> " << p << " [label=\"" << letter_name(x) << "\", style=" << (x < 3 ? styles[x] : "bold") << "];\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const Digraph& g) {
    std::ostringstream out;
    out << "digraph graph_ {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges()) out << "  " << e.from << " -> " << e.to << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace reachkit
