#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace reachkit {

using Vertex = std::uint32_t;

/// Directed multigraph. Parallel edges are kept: they matter when edges are
/// turned into letters (one edge per letter) and when serialized.
class Digraph {
public:
    struct Edge {
        Vertex from;
        Vertex to;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    Digraph() = default;
    explicit Digraph(std::size_t n_vertices) : out_(n_vertices) {}

    Digraph(std::size_t n_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) : Digraph(n_vertices) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    std::size_t num_vertices() const noexcept { return out_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Targets of u's out-edges in insertion order, with multiplicity.
    const std::vector<Vertex>& out(Vertex u) const { return out_.at(u); }
    std::size_t outdegree(Vertex u) const { return out_.at(u).size(); }

    std::vector<std::size_t> indegrees() const {
        std::vector<std::size_t> deg(num_vertices(), 0);
        for (const auto& e : edges_) ++deg[e.to];
        return deg;
    }

    Vertex add_vertex() {
        out_.emplace_back();
        return static_cast<Vertex>(out_.size() - 1);
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        edges_.push_back({u, v});
        out_[u].push_back(v);
    }

    void check_vertex(Vertex v) const {
        if (v >= num_vertices()) throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(num_vertices()) + ")");
    }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.edges_ == b.edges_ && a.out_.size() == b.out_.size(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> out_;
};

/// Vertices reachable from `from` (including itself), as a membership mask.
inline std::vector<bool> reachable(const Digraph& g, Vertex from) {
    g.check_vertex(from);
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<Vertex> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.out(u))
            if (!seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
    }
    return seen;
}

struct TopologicalSort {
    bool acyclic = true;
    std::vector<Vertex> order;  ///< valid when acyclic
    std::vector<Vertex> cycle;  ///< closed walk v0 -> ... -> v0 from the first back edge, when cyclic
};

/// DFS-based topological sort; stops at the first back edge found.
inline TopologicalSort topological_sort(const Digraph& g) {
    enum : std::uint8_t { White, Grey, Black };
    const std::size_t n = g.num_vertices();
    std::vector<std::uint8_t> colour(n, White);
    std::vector<Vertex> parent(n, 0);
    TopologicalSort result;
    std::vector<Vertex> post;
    post.reserve(n);

    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] != White) continue;
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        colour[root] = Grey;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            const auto& succ = g.out(u);
            if (next < succ.size()) {
                Vertex v = succ[next++];
                if (colour[v] == Grey) {
                    // back edge u -> v closes a cycle through the grey stack
                    std::vector<Vertex> cyc{v};
                    std::vector<Vertex> tail;
                    for (Vertex w = u; w != v; w = parent[w]) tail.push_back(w);
                    cyc.insert(cyc.end(), tail.rbegin(), tail.rend());
                    cyc.push_back(v);
                    result.acyclic = false;
                    result.cycle = std::move(cyc);
                    return result;
                }
                if (colour[v] == White) {
                    colour[v] = Grey;
                    parent[v] = u;
                    stack.emplace_back(v, 0);
                }
            } else {
                colour[u] = Black;
                post.push_back(u);
                stack.pop_back();
            }
        }
    }
    result.order.assign(post.rbegin(), post.rend());
    return result;
}

inline bool is_acyclic(const Digraph& g) { return topological_sort(g).acyclic; }

namespace detail {

inline std::vector<Vertex> require_topological_order(const Digraph& g, const char* op) {
    auto topo = topological_sort(g);
    if (!topo.acyclic) throw ContractError(std::string(op) + " requires an acyclic graph");
    return topo.order;
}

// to_t[v][L] is true iff some (v, t)-path has length L.
inline std::vector<std::vector<bool>> lengths_to(const Digraph& g, Vertex t, const std::vector<Vertex>& order) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<bool>> to_t(n, std::vector<bool>(n, false));
    to_t[t][0] = true;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex u = *it;
        for (Vertex v : g.out(u))
            for (std::size_t L = 0; L + 1 < n; ++L)
                if (to_t[v][L]) to_t[u][L + 1] = true;
    }
    return to_t;
}

}  // namespace detail

/// The exact set of lengths of (s, t)-paths in an acyclic graph, ascending.
///
/// Dynamic program over a topological order; on a DAG every path has fewer
/// than n_vertices edges, so each per-vertex length set is a bitmask of that size.
inline std::vector<std::size_t> st_path_lengths(const Digraph& g, Vertex s, Vertex t) {
    g.check_vertex(s);
    g.check_vertex(t);
    auto order = detail::require_topological_order(g, "st_path_lengths");
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<bool>> from_s(n, std::vector<bool>(n, false));
    from_s[s][0] = true;
    for (Vertex u : order)
        for (Vertex v : g.out(u))
            for (std::size_t L = 0; L + 1 < n; ++L)
                if (from_s[u][L]) from_s[v][L + 1] = true;
    std::vector<std::size_t> lengths;
    for (std::size_t L = 0; L < n; ++L)
        if (from_s[t][L]) lengths.push_back(L);
    return lengths;
}

/// Some (s, t)-path with exactly `length` edges, as a vertex sequence.
inline std::optional<std::vector<Vertex>> find_path_of_length(const Digraph& g, Vertex s, Vertex t, std::size_t length) {
    g.check_vertex(s);
    g.check_vertex(t);
    auto order = detail::require_topological_order(g, "find_path_of_length");
    if (length >= g.num_vertices()) return std::nullopt;
    auto to_t = detail::lengths_to(g, t, order);
    if (!to_t[s][length]) return std::nullopt;
    std::vector<Vertex> path{s};
    Vertex u = s;
    for (std::size_t remaining = length; remaining > 0; --remaining) {
        for (Vertex v : g.out(u))
            if (to_t[v][remaining - 1]) {
                u = v;
                break;
            }
        path.push_back(u);
    }
    return path;
}

/// Input of the constrained (s, t)-reachability problem: a graph, two
/// vertices and a length n such that every (s, t)-path has length n-1 or n
/// (plus the structural promises checked by verify_promises).
struct ConstrainedInstance {
    Digraph graph;
    Vertex s = 0;
    Vertex t = 0;
    std::size_t n = 1;
};

/// One entry per promise, with the offending witness when it fails.
struct PromiseReport {
    bool acyclic = false;
    bool t_is_sink = false;
    bool outdegree_at_most_two = false;
    bool path_lengths_ok = false;
    bool all_reach_t = false;

    std::vector<Vertex> cycle;
    std::optional<Vertex> bad_outdegree_vertex;
    std::vector<Vertex> bad_path;  ///< an (s, t)-path of length other than n-1, n
    std::optional<Vertex> cannot_reach_t;

    bool all() const noexcept { return acyclic && t_is_sink && outdegree_at_most_two && path_lengths_ok && all_reach_t; }

    /// Names of the failed promises, for error messages.
    std::string failures() const {
        std::string out;
        auto add = [&](bool ok, const char* name) {
            if (ok) return;
            if (!out.empty()) out += ", ";
            out += name;
        };
        add(acyclic, "acyclic");
        add(t_is_sink, "t-is-sink");
        add(outdegree_at_most_two, "outdegree-at-most-two");
        add(path_lengths_ok, "path-lengths");
        add(all_reach_t, "all-reach-t");
        return out;
    }
};

inline PromiseReport verify_promises(const ConstrainedInstance& inst) {
    const Digraph& g = inst.graph;
    g.check_vertex(inst.s);
    g.check_vertex(inst.t);
    PromiseReport r;

    auto topo = topological_sort(g);
    r.acyclic = topo.acyclic;
    if (!topo.acyclic) r.cycle = topo.cycle;

    r.t_is_sink = g.outdegree(inst.t) == 0;

    r.outdegree_at_most_two = true;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (v != inst.t && g.outdegree(v) > 2) {
            r.outdegree_at_most_two = false;
            r.bad_outdegree_vertex = v;
            break;
        }

    // reverse reachability from t
    std::vector<std::vector<Vertex>> in(g.num_vertices());
    for (const auto& e : g.edges()) in[e.to].push_back(e.from);
    std::vector<bool> reaches(g.num_vertices(), false);
    std::deque<Vertex> queue{inst.t};
    reaches[inst.t] = true;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : in[v])
            if (!reaches[u]) {
                reaches[u] = true;
                queue.push_back(u);
            }
    }
    r.all_reach_t = true;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!reaches[v]) {
            r.all_reach_t = false;
            r.cannot_reach_t = v;
            break;
        }

    if (topo.acyclic && inst.n >= 1) {
        r.path_lengths_ok = true;
        for (std::size_t L : st_path_lengths(g, inst.s, inst.t))
            if (L + 1 != inst.n && L != inst.n) {
                r.path_lengths_ok = false;
                r.bad_path = *find_path_of_length(g, inst.s, inst.t, L);
                break;
            }
    }
    return r;
}

/// True iff the instance has an (s, t)-path of length n-1.
inline bool shortcut_exists(const ConstrainedInstance& inst) {
    if (inst.n == 0) return false;
    auto lengths = st_path_lengths(inst.graph, inst.s, inst.t);
    return std::find(lengths.begin(), lengths.end(), inst.n - 1) != lengths.end();
}

struct ReducedGraph {
    Digraph graph;
    /// origin[v] is the input vertex that v stands for, or nullopt for fresh tree vertices.
    std::vector<std::optional<Vertex>> origin;
};

/// Replaces the out-edges of every vertex of outdegree > 2 (except `protected_vertex`)
/// with a binary tree rooted at that vertex whose leaves are its former targets.
///
/// Targets are sorted ascending and paired left to right, level by level, so
/// the tree is left-leaning and the output is deterministic. Input vertices keep
/// their indices; fresh vertices are appended.
inline ReducedGraph outdegree_reduce(const Digraph& g, Vertex protected_vertex) {
    g.check_vertex(protected_vertex);
    const std::size_t n = g.num_vertices();
    auto needs_tree = [&](Vertex u) { return u != protected_vertex && g.outdegree(u) > 2; };

    ReducedGraph r{Digraph(n), {}};
    for (Vertex v = 0; v < n; ++v) r.origin.emplace_back(v);
    for (const auto& e : g.edges())
        if (!needs_tree(e.from)) r.graph.add_edge(e.from, e.to);

    for (Vertex u = 0; u < n; ++u) {
        if (!needs_tree(u)) continue;
        std::vector<Vertex> level = g.out(u);
        std::sort(level.begin(), level.end());
        while (level.size() > 2) {
            std::vector<Vertex> next;
            for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
                Vertex m = r.graph.add_vertex();
                r.origin.emplace_back(std::nullopt);
                r.graph.add_edge(m, level[i]);
                r.graph.add_edge(m, level[i + 1]);
                next.push_back(m);
            }
            if (level.size() % 2 == 1) next.push_back(level.back());
            level = std::move(next);
        }
        for (Vertex v : level) r.graph.add_edge(u, v);
    }
    return r;
}

/// Duplicates the single out-edge of every non-exempt vertex of outdegree one,
/// so that all non-exempt vertices have outdegree exactly two.
inline Digraph saturate_outdegree_two(const Digraph& g, Vertex exempt) {
    g.check_vertex(exempt);
    Digraph out = g;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (u == exempt) continue;
        std::size_t d = g.outdegree(u);
        if (d == 0) throw ContractError("saturate_outdegree_two: vertex " + std::to_string(u) + " has outdegree 0");
        if (d > 2) throw ContractError("saturate_outdegree_two: vertex " + std::to_string(u) + " has outdegree " + std::to_string(d));
        if (d == 1) out.add_edge(u, g.out(u).front());
    }
    return out;
}

}  // namespace reachkit
