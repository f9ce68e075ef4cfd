#pragma once

// Seeded generators for property sweeps. All draws go through Rng::below so
// a (seed, size) pair gives the same instance on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "digraph.hpp"
#include "nfa.hpp"

namespace reachkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

struct RandomReachability {
    Digraph graph;
    Vertex s = 0;
    Vertex t = 0;
};

/// Acyclic digraph on `size` vertices in topological order 0..size-1. Every
/// vertex except the last gets one or two distinct forward edges; s = 0 and t
/// is drawn from 1..size-1 (t = 0 when size = 1).
inline RandomReachability random_acyclic_digraph(Rng& rng, std::size_t size) {
    RandomReachability r{Digraph(size), 0, 0};
    for (Vertex u = 0; u + 1 < size; ++u) {
        const std::size_t ahead = size - 1 - u;
        const std::size_t want = ahead >= 2 ? 1 + rng.below(2) : 1;
        Vertex first = static_cast<Vertex>(u + 1 + rng.below(ahead));
        r.graph.add_edge(u, first);
        if (want == 2) {
            Vertex second = first;
            while (second == first) second = static_cast<Vertex>(u + 1 + rng.below(ahead));
            r.graph.add_edge(u, second);
        }
    }
    if (size > 1) r.t = static_cast<Vertex>(1 + rng.below(size - 1));
    return r;
}

/// Instance satisfying all five promises on `size` vertices, s = 0 and
/// t = size-1. Vertices get levels: s is level 0, t level L (L drawn from
/// 1..size-1), vertex i < L has level i and the rest a random level below L.
/// Each non-t vertex on level i gets one or two distinct edges into level i+1;
/// level L-2 may also jump straight to t. Every path from a vertex to t then
/// has one of two consecutive lengths. With M the shortest (s, t)-path length,
/// n is M or M+1 (coin flip) when all lengths coincide and M+1 otherwise, so
/// shortcut and no-shortcut instances both occur.
inline ConstrainedInstance random_constrained_instance(Rng& rng, std::size_t size) {
    if (size <= 1) return {Digraph(1), 0, 0, 1};
    const Vertex t = static_cast<Vertex>(size - 1);
    const std::size_t L = 1 + rng.below(size - 1);
    std::vector<std::size_t> level(size, 0);
    level[t] = L;
    for (Vertex v = 1; v < t; ++v) level[v] = v < L ? v : rng.below(L);
    std::vector<std::vector<Vertex>> by_level(L + 1);
    for (Vertex v = 0; v < size; ++v) by_level[level[v]].push_back(v);

    ConstrainedInstance inst{Digraph(size), 0, t, 1};
    for (Vertex u = 0; u < t; ++u) {
        std::vector<Vertex> options = by_level[level[u] + 1];
        if (level[u] + 2 == L) options.push_back(t);
        const std::size_t want = options.size() >= 2 ? 1 + rng.below(2) : 1;
        for (std::size_t i = 0; i < want; ++i) {
            std::size_t j = i + rng.below(options.size() - i);
            std::swap(options[i], options[j]);
            inst.graph.add_edge(u, options[i]);
        }
    }
    auto lengths = st_path_lengths(inst.graph, inst.s, inst.t);
    const std::size_t M = lengths.front();
    if (lengths.size() == 1) inst.n = rng.below(2) == 0 ? M + 1 : std::max<std::size_t>(M, 1);
    else inst.n = M + 1;
    return inst;
}

/// Every (q, x, p) present independently with probability `density`.
inline Nfa random_nfa(Rng& rng, std::size_t n, std::size_t k, double density) {
    Nfa a(n, k);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x)
            for (State p = 0; p < n; ++p)
                if (rng.chance(density)) a.add_transition(q, x, p);
    return a;
}

inline Nfa random_total_dfa(Rng& rng, std::size_t n, std::size_t k) {
    Nfa a(n, k);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x) a.add_transition(q, x, static_cast<State>(rng.below(n)));
    return a;
}

/// Each (q, x) gets 0, 1 or 2 successors (weights 1:3:2); redrawn until the
/// result is 2-image-bounded.
inline Nfa random_2ib_nfa(Rng& rng, std::size_t n, std::size_t k) {
    for (;;) {
        Nfa a(n, k);
        for (State q = 0; q < n; ++q)
            for (Letter x = 0; x < k; ++x) {
                auto roll = rng.below(6);
                std::size_t count = roll == 0 ? 0 : roll <= 3 ? 1 : 2;
                for (std::size_t i = 0; i < count; ++i) a.add_transition(q, x, static_cast<State>(rng.below(n)));
            }
        if (image_bound_check(a, 2).bounded) return a;
    }
}

/// Total DFA drawn until strongly connected.
inline Nfa random_strongly_connected_dfa(Rng& rng, std::size_t n, std::size_t k) {
    for (;;) {
        Nfa a = random_total_dfa(rng, n, k);
        if (is_strongly_connected(a)) return a;
    }
}

/// Strongly connected total DFA with `extra` attempted additions of random
/// transitions, each kept only if the automaton stays unambiguous.
inline Nfa random_strongly_connected_unambiguous_nfa(Rng& rng, std::size_t n, std::size_t k, std::size_t extra) {
    Nfa a = random_strongly_connected_dfa(rng, n, k);
    for (std::size_t i = 0; i < extra; ++i) {
        Nfa b = a;
        b.add_transition(static_cast<State>(rng.below(n)), static_cast<Letter>(rng.below(k)), static_cast<State>(rng.below(n)));
        if (is_unambiguous(b).unambiguous) a = std::move(b);
    }
    return a;
}

}  // namespace reachkit
