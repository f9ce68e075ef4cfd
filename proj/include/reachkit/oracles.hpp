#pragma once

// Exhaustive reference procedures. Exponential in the number of states and
// guarded by a state limit; used to certify analysis results and gadget
// ground truths on small instances.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "nfa.hpp"
#include "state_set.hpp"

namespace reachkit::oracles {

inline constexpr std::size_t default_max_states = 20;

namespace detail {

inline void guard(const Nfa& nfa, std::size_t max_states, const char* op) {
    if (nfa.num_states() > max_states)
        throw ResourceError(std::string(op) + ": " + std::to_string(nfa.num_states()) + " states exceed the oracle guard", max_states);
}

/// Breadth-first search over the subsets reachable from `starts`, letters in
/// ascending order. Visits every reachable set unless `stop` returns true, in
/// which case the word leading to that set is returned. BFS order makes that
/// word a shortest one.
template <typename Stop, typename Visit>
std::optional<Word> power_set_bfs(const Nfa& nfa, const std::vector<StateSet>& starts, Stop stop, Visit visit) {
    std::vector<StateSet> sets;
    std::vector<std::pair<std::size_t, Letter>> parent;
    std::unordered_map<StateSet, std::size_t, StateSetHash> index;
    constexpr std::size_t root = static_cast<std::size_t>(-1);
    auto word_to = [&](std::size_t i) {
        Word w;
        for (; parent[i].first != root; i = parent[i].first) w.push_back(parent[i].second);
        std::reverse(w.begin(), w.end());
        return w;
    };
    for (const auto& s : starts) {
        if (index.contains(s)) continue;
        index.emplace(s, sets.size());
        sets.push_back(s);
        parent.emplace_back(root, 0);
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        visit(sets[i]);
        if (stop(sets[i])) return word_to(i);
        for (Letter x = 0; x < nfa.num_letters(); ++x) {
            StateSet next = step(nfa, sets[i], x);
            if (index.contains(next)) continue;
            index.emplace(next, sets.size());
            sets.push_back(std::move(next));
            parent.emplace_back(i, x);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// A shortest word w with Q·w = ∅, or nullopt when the NFA is complete.
inline std::optional<Word> shortest_mortal_word(const Nfa& nfa, std::size_t max_states = default_max_states) {
    detail::guard(nfa, max_states, "shortest_mortal_word");
    return detail::power_set_bfs(nfa, {all_states(nfa)}, [](const StateSet& s) { return s.empty(); }, [](const StateSet&) {});
}

/// A shortest word w with |Q·w| = 1, or nullopt when the DFA is not synchronising.
inline std::optional<Word> shortest_reset_word(const Nfa& dfa, std::size_t max_states = default_max_states) {
    if (!is_total_dfa(dfa)) throw ContractError("shortest_reset_word: input is not a total DFA");
    detail::guard(dfa, max_states, "shortest_reset_word");
    return detail::power_set_bfs(dfa, {all_states(dfa)}, [](const StateSet& s) { return s.size() == 1; }, [](const StateSet&) {});
}

/// Minimum of |Q·w| over all words w.
inline std::size_t rank(const Nfa& dfa, std::size_t max_states = default_max_states) {
    if (!is_total_dfa(dfa)) throw ContractError("rank: input is not a total DFA");
    detail::guard(dfa, max_states, "rank");
    std::size_t best = dfa.num_states();
    detail::power_set_bfs(dfa, {all_states(dfa)}, [](const StateSet& s) { return s.size() == 1; },
                          [&](const StateSet& s) { best = std::min(best, s.size()); });
    return best;
}

/// Maximum of |q·w| over all states q and words w.
inline std::size_t image_size_frontier(const Nfa& nfa, std::size_t max_states = default_max_states) {
    detail::guard(nfa, max_states, "image_size_frontier");
    std::vector<StateSet> singletons;
    for (State q = 0; q < nfa.num_states(); ++q) singletons.emplace_back(nfa.num_states(), std::initializer_list<State>{q});
    std::size_t best = 0;
    detail::power_set_bfs(nfa, singletons, [](const StateSet&) { return false; },
                          [&](const StateSet& s) { best = std::max(best, s.size()); });
    return best;
}

struct BoundedDiamond {
    State p = 0;
    State q = 0;
    Word word;
};

/// Shortest diamond with |w| <= max_len. From each start state p the two
/// paths are run in lock step over the pair automaton; a diamond is a step from
/// an off-diagonal pair back onto the diagonal. Ties are broken by the smallest p.
inline std::optional<BoundedDiamond> diamond_search_bounded(const Nfa& nfa, std::size_t max_len) {
    const std::size_t n = nfa.num_states();
    std::optional<BoundedDiamond> best;
    for (State p = 0; p < n; ++p) {
        std::vector<std::pair<State, State>> nodes{{p, p}};
        std::vector<std::pair<std::size_t, Letter>> parent{{0, 0}};
        std::vector<std::size_t> depth{0};
        std::unordered_set<std::size_t> seen{static_cast<std::size_t>(p) * n + p};
        std::size_t limit = best ? std::min(max_len, best->word.size() - 1) : max_len;
        bool found = false;
        for (std::size_t i = 0; i < nodes.size() && !found; ++i) {
            if (depth[i] >= limit) break;
            auto [u, v] = nodes[i];
            for (Letter x = 0; x < nfa.num_letters() && !found; ++x)
                for (State u2 : nfa.successors(u, x)) {
                    for (State v2 : nfa.successors(v, x)) {
                        if (u != v && u2 == v2) {
                            Word w{x};
                            for (std::size_t j = i; j != 0; j = parent[j].first) w.push_back(parent[j].second);
                            std::reverse(w.begin(), w.end());
                            best = BoundedDiamond{p, u2, std::move(w)};
                            found = true;
                            break;
                        }
                        std::size_t key = static_cast<std::size_t>(u2) * n + v2;
                        if (!seen.insert(key).second) continue;
                        nodes.emplace_back(u2, v2);
                        parent.emplace_back(i, x);
                        depth.push_back(depth[i] + 1);
                    }
                    if (found) break;
                }
        }
    }
    return best;
}

}  // namespace reachkit::oracles
