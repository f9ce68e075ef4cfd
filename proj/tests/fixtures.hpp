#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "reachkit/reachkit.hpp"

namespace fixtures {

using namespace reachkit;

// a: 0 -> {0, 1}, 2 -> {0};  b: 0 -> {2}, 1 -> {2}
inline Nfa diamond_nfa() { return Nfa(3, 2, {{{0, 1}, {2}}, {{}, {2}}, {{0}, {}}}); }

inline MatrixSet diamond_matrices() {
    return {3, {{{2, 1, 0}, {0, 0, 0}, {4, 0, 0}}, {{0, 0, 1}, {0, 0, 7}, {0, 0, 0}}}};
}

// a merges both states into 0, b sends both to 1
inline Nfa merge_dfa() { return Nfa(2, 2, {{{0}, {1}}, {{0}, {1}}}); }

// a: 0 -> 1 -> 1; not strongly connected
inline Nfa drain_dfa() { return Nfa(2, 1, {{{1}}, {{1}}}); }

// a swaps the two states: every cycle has even length
inline Nfa period_two_dfa() { return Nfa(2, 1, {{{1}}, {{0}}}); }

// a: i -> i+1 mod 3;  b: 0 -> 1, 1 -> 1, 2 -> 2
inline Nfa rotate_merge3() { return Nfa(3, 2, {{{1}, {1}}, {{2}, {1}}, {{0}, {2}}}); }

// one letter: cycle 0 -> 1 -> ... -> m-1 -> 0 plus a loop on 0
inline Nfa chord_cycle(std::size_t m) {
    Nfa a(m, 1);
    for (State q = 0; q < m; ++q) a.add_transition(q, 0, static_cast<State>((q + 1) % m));
    a.add_transition(0, 0, 0);
    return a;
}

// s -> v -> t
inline Digraph path3() { return Digraph(3, {{0, 1}, {1, 2}}); }

// s = 0, t = 2, n = 3: the only path has length 2 = n - 1
inline ConstrainedInstance shortcut_instance() { return {path3(), 0, 2, 3}; }

// the same path with n = 2: its length equals n
inline ConstrainedInstance no_shortcut_instance() { return {path3(), 0, 2, 2}; }

inline std::vector<ConstrainedInstance> small_constrained(std::uint64_t seed, std::size_t count, std::size_t max_size) {
    Rng rng(seed);
    std::vector<ConstrainedInstance> out;
    while (out.size() < count) out.push_back(random_constrained_instance(rng, 2 + rng.below(max_size - 1)));
    return out;
}

// Lengths of all (s, t)-paths by explicit depth-first enumeration.
inline std::set<std::size_t> enumerate_path_lengths(const Digraph& g, Vertex s, Vertex t) {
    std::set<std::size_t> out;
    std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
    while (!stack.empty()) {
        auto [u, len] = stack.back();
        stack.pop_back();
        if (u == t) out.insert(len);
        for (Vertex v : g.out(u)) stack.push_back({v, len + 1});
    }
    return out;
}

// gcd of the lengths k <= n for which a closed walk of length k exists.
inline std::size_t period_by_walks(const Nfa& a) {
    const std::size_t n = a.num_states();
    auto adj = underlying_graph(a);
    std::size_t g = 0;
    for (State q = 0; q < n; ++q) {
        std::vector<bool> cur(n, false);
        cur[q] = true;
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<bool> next(n, false);
            for (State u = 0; u < n; ++u)
                if (cur[u])
                    for (State v : adj[u]) next[v] = true;
            cur = std::move(next);
            if (cur[q]) g = std::gcd(g, k);
        }
    }
    return g;
}

}  // namespace fixtures
