#pragma once

// Polynomial decision procedures for reachability properties of semi-automata.
// Everything here scales to large instances except the guarded power-set
// fallback inside is_complete.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "nfa.hpp"
#include "state_set.hpp"

namespace reachkit {

// ---------------------------------------------------------------------------
// Strongly connected components
// ---------------------------------------------------------------------------

struct Components {
    std::vector<std::size_t> id;  ///< component of each vertex
    std::size_t count = 0;
};

/// Iterative Tarjan over successor lists. Component ids are assigned in the
/// order components are completed (reverse topological order of the condensation).
inline Components strongly_connected_components(const std::vector<std::vector<State>>& adj) {
    const std::size_t n = adj.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    Components comp{std::vector<std::size_t>(n, 0), 0};
    std::size_t counter = 0;

    for (State root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<std::pair<State, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            State v = call.back().first;
            std::size_t& next = call.back().second;
            if (next < adj[v].size()) {
                State w = adj[v][next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.id[w] = comp.count;
                } while (w != v);
                ++comp.count;
            }
            call.pop_back();
            if (!call.empty()) {
                State parent = call.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

inline bool is_strongly_connected(const Nfa& nfa) {
    return strongly_connected_components(underlying_graph(nfa)).count == 1;
}

/// gcd of the lengths of all cycles of the underlying digraph; 0 when acyclic.
///
/// Per component: BFS levels from any root, then the gcd of
/// |level(u) + 1 - level(v)| over internal edges u -> v.
inline std::size_t period(const Nfa& nfa) {
    auto adj = underlying_graph(nfa);
    auto comp = strongly_connected_components(adj);
    const std::size_t n = adj.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> level(n, unset);
    std::size_t g = 0;
    for (State root = 0; root < n; ++root) {
        if (level[root] != unset) continue;
        level[root] = 0;
        std::deque<State> queue{root};
        while (!queue.empty()) {
            State u = queue.front();
            queue.pop_front();
            for (State v : adj[u]) {
                if (comp.id[v] != comp.id[u]) continue;
                if (level[v] == unset) {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                } else {
                    auto a = static_cast<long long>(level[u]) + 1;
                    auto b = static_cast<long long>(level[v]);
                    g = std::gcd(g, static_cast<std::size_t>(a > b ? a - b : b - a));
                }
            }
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// k-image-boundedness
// ---------------------------------------------------------------------------

struct ImageBoundResult {
    bool bounded = true;
    std::optional<State> state;  ///< q with |q·word| > k, on failure
    Word word;
};

/// Decides whether |q·w| <= k for all q and w, by BFS over the images of
/// singletons. The search aborts the moment an image exceeds k, so for fixed k
/// it never stores more than sum_{i<=k} C(n, i) sets.
inline ImageBoundResult image_bound_check(const Nfa& nfa, std::size_t k) {
    if (k == 0) throw ContractError("image_bound_check: k must be at least 1");
    struct Node {
        std::size_t parent;
        Letter letter;
        State origin;
    };
    std::vector<StateSet> sets;
    std::vector<Node> nodes;
    std::unordered_map<StateSet, std::size_t, StateSetHash> seen;
    std::deque<std::size_t> queue;
    constexpr std::size_t root = static_cast<std::size_t>(-1);
    for (State q = 0; q < nfa.num_states(); ++q) {
        StateSet s(nfa.num_states(), {q});
        if (seen.contains(s)) continue;
        seen.emplace(s, sets.size());
        sets.push_back(s);
        nodes.push_back({root, 0, q});
        queue.push_back(sets.size() - 1);
    }
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < nfa.num_letters(); ++x) {
            StateSet next = step(nfa, sets[i], x);
            if (next.size() > k) {
                ImageBoundResult r{false, nodes[i].origin, {x}};
                for (std::size_t j = i; nodes[j].parent != root; j = nodes[j].parent) r.word.push_back(nodes[j].letter);
                std::reverse(r.word.begin(), r.word.end());
                return r;
            }
            if (next.empty() || seen.contains(next)) continue;
            seen.emplace(next, sets.size());
            sets.push_back(std::move(next));
            nodes.push_back({i, x, nodes[i].origin});
            queue.push_back(sets.size() - 1);
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Completeness
// ---------------------------------------------------------------------------

struct CompletenessResult {
    bool complete = true;
    std::optional<Word> mortal_word;  ///< present iff incomplete
    std::string method;               ///< "dfa", "2-image-bounded" or "power-set"
};

struct CompletenessOptions {
    bool force = false;
    std::size_t max_states = 22;  ///< cap for the exponential fallback
};

/// Completeness of a (partial) DFA by token elimination: the DFA is incomplete
/// iff every state can be driven to a state with an undefined letter. The
/// mortal word removes the tokens one at a time.
inline CompletenessResult is_complete_dfa(const Nfa& dfa) {
    if (!is_dfa(dfa)) throw ContractError("is_complete_dfa: input is not a DFA");
    const std::size_t n = dfa.num_states();
    // kill[q]: shortest word whose application kills q, found by backward BFS
    // from states that have an undefined letter.
    std::vector<std::vector<std::pair<State, Letter>>> pred(n);
    for (State p = 0; p < n; ++p)
        for (Letter x = 0; x < dfa.num_letters(); ++x)
            for (State q : dfa.successors(p, x)) pred[q].emplace_back(p, x);
    std::vector<std::optional<Word>> kill(n);
    std::deque<State> queue;
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < dfa.num_letters(); ++x)
            if (dfa.successors(q, x).empty()) {
                kill[q] = Word{x};
                queue.push_back(q);
                break;
            }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (auto [p, x] : pred[q]) {
            if (kill[p]) continue;
            Word w{x};
            w.insert(w.end(), kill[q]->begin(), kill[q]->end());
            kill[p] = std::move(w);
            queue.push_back(p);
        }
    }
    CompletenessResult r{true, std::nullopt, "dfa"};
    for (State q = 0; q < n; ++q)
        if (!kill[q]) return r;
    Word w;
    for (State q = 0; q < n; ++q) {
        auto cur = dfa_run(dfa, q, w);
        if (cur < 0) continue;
        const Word& k = *kill[static_cast<State>(cur)];
        w.insert(w.end(), k.begin(), k.end());
    }
    r.complete = false;
    r.mortal_word = std::move(w);
    return r;
}

namespace detail {

// Shortest word mapping `start` to the empty set; nullopt if none.
inline std::optional<Word> shortest_kill(const Nfa& nfa, const StateSet& start) {
    if (start.empty()) return Word{};
    std::vector<StateSet> sets{start};
    std::vector<std::pair<std::size_t, Letter>> parent{{0, 0}};
    std::unordered_map<StateSet, std::size_t, StateSetHash> seen{{start, 0}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (Letter x = 0; x < nfa.num_letters(); ++x) {
            StateSet next = step(nfa, sets[i], x);
            if (next.empty()) {
                Word w{x};
                for (std::size_t j = i; j != 0; j = parent[j].first) w.push_back(parent[j].second);
                std::reverse(w.begin(), w.end());
                return w;
            }
            if (seen.contains(next)) continue;
            seen.emplace(next, sets.size());
            sets.push_back(std::move(next));
            parent.emplace_back(i, x);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Completeness of a 2-image-bounded NFA.
///
/// The NFA is incomplete iff every pair {p, q} (p = q allowed) can be killed by
/// some word. Each pair search runs over unions p·w ∪ q·w, which have at most
/// four states. On incompleteness the mortal word is assembled by killing the
/// current image of q_1, then of q_2, and so on; 2-image-boundedness keeps
/// each of these images a pair.
inline CompletenessResult is_complete_2ib(const Nfa& nfa) {
    if (!image_bound_check(nfa, 2).bounded) throw ContractError("is_complete_2ib: input is not 2-image-bounded");
    const std::size_t n = nfa.num_states();
    std::unordered_map<std::uint64_t, Word> kill;
    auto key = [](State p, State q) { return (static_cast<std::uint64_t>(std::min(p, q)) << 32) | std::max(p, q); };
    CompletenessResult r{true, std::nullopt, "2-image-bounded"};
    for (State p = 0; p < n; ++p)
        for (State q = p; q < n; ++q) {
            auto w = detail::shortest_kill(nfa, StateSet(n, {p, q}));
            if (!w) return r;
            kill.emplace(key(p, q), std::move(*w));
        }
    Word word;
    for (State q = 0; q < n; ++q) {
        auto image = apply(nfa, q, word).members();
        if (image.empty()) continue;
        State a = image.front();
        State b = image.back();  // |image| <= 2
        const Word& k = kill.at(key(a, b));
        word.insert(word.end(), k.begin(), k.end());
    }
    r.complete = false;
    r.mortal_word = std::move(word);
    return r;
}

/// Completeness of an arbitrary NFA. DFAs use token elimination, 2-image-bounded
/// NFAs the pair characterisation; anything else falls back to a power-set BFS
/// from the full state set, which refuses to run above `max_states` unless forced.
inline CompletenessResult is_complete(const Nfa& nfa, const CompletenessOptions& opts = {}) {
    if (is_dfa(nfa)) return is_complete_dfa(nfa);
    if (image_bound_check(nfa, 2).bounded) return is_complete_2ib(nfa);
    if (nfa.num_states() > opts.max_states && !opts.force)
        throw ResourceError("is_complete: general NFA with " + std::to_string(nfa.num_states()) + " states needs the power-set search", opts.max_states);
    CompletenessResult r{true, std::nullopt, "power-set"};
    if (auto w = detail::shortest_kill(nfa, all_states(nfa))) {
        r.complete = false;
        r.mortal_word = std::move(w);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Synchronisation
// ---------------------------------------------------------------------------

struct SyncResult {
    bool synchronising = false;
    std::optional<Word> reset_word;
};

/// Synchronisation of a total DFA via the pair automaton: synchronising iff
/// every pair of states can be merged.
///
/// The reset word is built greedily: repeatedly take the two smallest states of
/// the current image and append a shortest word merging them. It is not
/// necessarily a shortest reset word.
inline SyncResult is_synchronising(const Nfa& dfa) {
    if (!is_total_dfa(dfa)) throw ContractError("is_synchronising: input is not a total DFA");
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.num_letters();
    if (n == 1) return {true, Word{}};

    auto next = [&](State q, Letter x) { return dfa.successors(q, x).front(); };
    auto pair_id = [n](State p, State q) {
        if (p > q) std::swap(p, q);
        return static_cast<std::size_t>(p) * n + q;
    };
    // backward BFS over unordered pairs from the "merged" target
    std::vector<std::vector<std::vector<State>>> pred(k, std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x) pred[x][next(q, x)].push_back(q);

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(n * n, unset);
    std::vector<Letter> via(n * n, 0);
    std::deque<std::pair<State, State>> queue;
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q)
            for (Letter x = 0; x < k; ++x)
                if (next(p, x) == next(q, x)) {
                    dist[pair_id(p, q)] = 1;
                    via[pair_id(p, q)] = x;
                    queue.emplace_back(p, q);
                    break;
                }
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        std::size_t d = dist[pair_id(p, q)];
        for (Letter x = 0; x < k; ++x)
            for (State a : pred[x][p])
                for (State b : pred[x][q]) {
                    if (a == b) continue;
                    std::size_t id = pair_id(a, b);
                    if (dist[id] != unset) continue;
                    dist[id] = d + 1;
                    via[id] = x;
                    queue.emplace_back(std::min(a, b), std::max(a, b));
                }
    }
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q)
            if (dist[pair_id(p, q)] == unset) return {false, std::nullopt};

    Word word;
    std::vector<State> current(n);
    std::iota(current.begin(), current.end(), State{0});
    while (current.size() > 1) {
        State p = current[0], q = current[1];
        Word merge;
        while (p != q) {
            Letter x = via[pair_id(p, q)];
            merge.push_back(x);
            p = next(p, x);
            q = next(q, x);
        }
        for (State& s : current)
            for (Letter x : merge) s = next(s, x);
        std::sort(current.begin(), current.end());
        current.erase(std::unique(current.begin(), current.end()), current.end());
        word.insert(word.end(), merge.begin(), merge.end());
    }
    return {true, std::move(word)};
}

// ---------------------------------------------------------------------------
// Unambiguity
// ---------------------------------------------------------------------------

/// p·w1 contains t1 != t2, and both t1·w2 and t2·w2 contain q, with w = w1 w2.
struct Diamond {
    State p = 0;
    State q = 0;
    Word word;
    std::size_t split = 0;  ///< |w1|
    State t1 = 0;
    State t2 = 0;
};

struct AmbiguityResult {
    bool unambiguous = true;
    std::optional<Diamond> diamond;
};

/// Searches the ordered pair automaton for an off-diagonal pair that is
/// reachable from the diagonal and co-reachable to it. Among all such pairs the
/// witness minimises |w|, then (t1, t2).
inline AmbiguityResult is_unambiguous(const Nfa& nfa) {
    const std::size_t n = nfa.num_states();
    const std::size_t k = nfa.num_letters();
    const Nfa rev = reverse(nfa);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    auto id = [n](State a, State b) { return static_cast<std::size_t>(a) * n + b; };

    struct Link {
        std::size_t pair = unset;
        Letter letter = 0;
    };
    auto search = [&](const Nfa& a, std::vector<std::size_t>& dist, std::vector<Link>& link) {
        dist.assign(n * n, unset);
        link.assign(n * n, {});
        std::deque<std::size_t> queue;
        for (State p = 0; p < n; ++p) {
            dist[id(p, p)] = 0;
            queue.push_back(id(p, p));
        }
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            State u = static_cast<State>(cur / n), v = static_cast<State>(cur % n);
            for (Letter x = 0; x < k; ++x)
                for (State u2 : a.successors(u, x))
                    for (State v2 : a.successors(v, x)) {
                        std::size_t nxt = id(u2, v2);
                        if (dist[nxt] != unset) continue;
                        dist[nxt] = dist[cur] + 1;
                        link[nxt] = {cur, x};
                        queue.push_back(nxt);
                    }
        }
    };
    std::vector<std::size_t> fwd, bwd;
    std::vector<Link> fwd_link, bwd_link;
    search(nfa, fwd, fwd_link);
    search(rev, bwd, bwd_link);

    std::size_t best = unset, best_len = unset;
    for (State a = 0; a < n; ++a)
        for (State b = a + 1; b < n; ++b) {
            std::size_t i = id(a, b);
            if (fwd[i] == unset || bwd[i] == unset) continue;
            if (fwd[i] + bwd[i] < best_len) {
                best_len = fwd[i] + bwd[i];
                best = i;
            }
        }
    if (best == unset) return {};

    Diamond d;
    d.t1 = static_cast<State>(best / n);
    d.t2 = static_cast<State>(best % n);
    Word w1;
    std::size_t cur = best;
    while (fwd[cur] != 0) {
        w1.push_back(fwd_link[cur].letter);
        cur = fwd_link[cur].pair;
    }
    std::reverse(w1.begin(), w1.end());
    d.p = static_cast<State>(cur / n);
    Word w2;
    cur = best;
    while (bwd[cur] != 0) {
        w2.push_back(bwd_link[cur].letter);
        cur = bwd_link[cur].pair;
    }
    d.q = static_cast<State>(cur / n);
    d.split = w1.size();
    d.word = std::move(w1);
    d.word.insert(d.word.end(), w2.begin(), w2.end());
    return {false, std::move(d)};
}

}  // namespace reachkit
