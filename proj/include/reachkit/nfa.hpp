#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "state_set.hpp"

namespace reachkit {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Name of letter `x`: "a".."z" for the first 26 letters, "l<k>" afterwards.
inline std::string letter_name(Letter x) {
    if (x < 26) return std::string(1, static_cast<char>('a' + x));
    return "l" + std::to_string(x);
}

/// Concatenated letter names; the empty word prints as "".
inline std::string format_word(const Word& w) {
    std::string out;
    for (Letter x : w) out += letter_name(x);
    return out;
}

/// Inverse of format_word. A name "l" followed by digits is the long form;
/// digits never start a name so the split is unambiguous.
inline Word parse_word(std::string_view text, std::size_t n_letters) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        Letter x;
        if (c == 'l' && i + 1 < text.size() && text[i + 1] >= '0' && text[i + 1] <= '9') {
            std::size_t j = i + 1;
            std::uint64_t v = 0;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') v = v * 10 + static_cast<std::uint64_t>(text[j++] - '0');
            x = static_cast<Letter>(v);
            i = j;
        } else if (c >= 'a' && c <= 'z') {
            x = static_cast<Letter>(c - 'a');
            ++i;
        } else {
            throw InputError("bad character '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
        }
        if (x >= n_letters) throw InputError("letter " + letter_name(x) + " out of range in word \"" + std::string(text) + "\"");
        w.push_back(x);
    }
    return w;
}

/// A nondeterministic semi-automaton: states, letters and a transition
/// relation, with no initial or final states.
///
/// Successor lists are kept sorted and duplicate-free, so two automata with the
/// same relation compare equal and serialize identically. DFAs and total DFAs
/// are the same type; use is_dfa / is_total_dfa to test the refinement.
class Nfa {
public:
    Nfa() = default;

    Nfa(std::size_t n_states, std::size_t n_letters) : n_states_(n_states), n_letters_(n_letters), delta_(n_states * n_letters) {
        if (n_states == 0) throw InputError("an automaton needs at least one state");
        if (n_letters == 0) throw InputError("an automaton needs at least one letter");
    }

    /// delta[q][x] lists the successors of q by x, in any order.
    Nfa(std::size_t n_states, std::size_t n_letters, const std::vector<std::vector<std::vector<State>>>& delta)
        : Nfa(n_states, n_letters) {
        if (delta.size() != n_states) throw InputError("delta has " + std::to_string(delta.size()) + " rows, expected " + std::to_string(n_states));
        for (std::size_t q = 0; q < n_states; ++q) {
            if (delta[q].size() != n_letters)
                throw InputError("delta row " + std::to_string(q) + " has " + std::to_string(delta[q].size()) + " letters, expected " + std::to_string(n_letters));
            for (std::size_t x = 0; x < n_letters; ++x)
                for (State p : delta[q][x]) add_transition(static_cast<State>(q), static_cast<Letter>(x), p);
        }
    }

    std::size_t num_states() const noexcept { return n_states_; }
    std::size_t num_letters() const noexcept { return n_letters_; }

    std::span<const State> successors(State q, Letter x) const { return delta_[index(q, x)]; }

    void add_transition(State p, Letter x, State q) {
        check_state(p);
        check_letter(x);
        check_state(q);
        auto& succ = delta_[index(p, x)];
        auto it = std::lower_bound(succ.begin(), succ.end(), q);
        if (it == succ.end() || *it != q) succ.insert(it, q);
    }

    void remove_transitions(State p, Letter x) {
        check_state(p);
        check_letter(x);
        delta_[index(p, x)].clear();
    }

    std::size_t num_transitions() const noexcept {
        std::size_t n = 0;
        for (const auto& s : delta_) n += s.size();
        return n;
    }

    void check_state(State q) const {
        if (q >= n_states_) throw InputError("state " + std::to_string(q) + " out of range [0, " + std::to_string(n_states_) + ")");
    }

    void check_letter(Letter x) const {
        if (x >= n_letters_) throw InputError("letter " + std::to_string(x) + " out of range [0, " + std::to_string(n_letters_) + ")");
    }

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    std::size_t index(State q, Letter x) const noexcept { return static_cast<std::size_t>(q) * n_letters_ + x; }

    std::size_t n_states_ = 0;
    std::size_t n_letters_ = 0;
    std::vector<std::vector<State>> delta_;
};

/// Image of `src` under a single letter.
inline StateSet step(const Nfa& nfa, const StateSet& src, Letter x) {
    nfa.check_letter(x);
    StateSet out(nfa.num_states());
    for (State q : src.members())
        for (State p : nfa.successors(q, x)) out.insert(p);
    return out;
}

/// Union of the images q·w over q in `src`. The result may be empty (w kills src).
inline StateSet apply(const Nfa& nfa, const StateSet& src, const Word& w) {
    for (Letter x : w) nfa.check_letter(x);
    StateSet cur = src;
    for (Letter x : w) {
        if (cur.empty()) break;
        cur = step(nfa, cur, x);
    }
    return cur;
}

inline StateSet apply(const Nfa& nfa, State q, const Word& w) {
    nfa.check_state(q);
    return apply(nfa, StateSet(nfa.num_states(), {q}), w);
}

inline StateSet all_states(const Nfa& nfa) { return StateSet::full(nfa.num_states()); }

inline bool is_dfa(const Nfa& nfa) {
    for (State q = 0; q < nfa.num_states(); ++q)
        for (Letter x = 0; x < nfa.num_letters(); ++x)
            if (nfa.successors(q, x).size() > 1) return false;
    return true;
}

inline bool is_total_dfa(const Nfa& nfa) {
    for (State q = 0; q < nfa.num_states(); ++q)
        for (Letter x = 0; x < nfa.num_letters(); ++x)
            if (nfa.successors(q, x).size() != 1) return false;
    return true;
}

/// Successor of q by x in a DFA, or -1 when undefined.
inline std::int64_t dfa_next(const Nfa& dfa, State q, Letter x) {
    auto succ = dfa.successors(q, x);
    return succ.empty() ? -1 : static_cast<std::int64_t>(succ.front());
}

/// State reached from q by w in a DFA, or -1 when w kills q.
inline std::int64_t dfa_run(const Nfa& dfa, State q, const Word& w) {
    std::int64_t cur = q;
    for (Letter x : w) {
        if (cur < 0) break;
        cur = dfa_next(dfa, static_cast<State>(cur), x);
    }
    return cur;
}

/// Number of distinct paths from p to q labelled by w, saturating at `cap`.
inline std::size_t count_paths(const Nfa& nfa, State p, const Word& w, State q, std::size_t cap = 1u << 20) {
    nfa.check_state(p);
    nfa.check_state(q);
    std::vector<std::size_t> ways(nfa.num_states(), 0), next(nfa.num_states(), 0);
    ways[p] = 1;
    for (Letter x : w) {
        nfa.check_letter(x);
        std::fill(next.begin(), next.end(), 0);
        for (State u = 0; u < nfa.num_states(); ++u) {
            if (ways[u] == 0) continue;
            for (State v : nfa.successors(u, x)) next[v] = std::min(cap, next[v] + ways[u]);
        }
        ways.swap(next);
    }
    return ways[q];
}

/// Transposes the relation: (p, x, q) becomes (q, x, p).
inline Nfa reverse(const Nfa& nfa) {
    Nfa out(nfa.num_states(), nfa.num_letters());
    for (State p = 0; p < nfa.num_states(); ++p)
        for (Letter x = 0; x < nfa.num_letters(); ++x)
            for (State q : nfa.successors(p, x)) out.add_transition(q, x, p);
    return out;
}

/// Underlying digraph as successor lists (labels forgotten, duplicates removed).
inline std::vector<std::vector<State>> underlying_graph(const Nfa& nfa) {
    std::vector<std::vector<State>> adj(nfa.num_states());
    for (State p = 0; p < nfa.num_states(); ++p) {
        for (Letter x = 0; x < nfa.num_letters(); ++x)
            for (State q : nfa.successors(p, x)) adj[p].push_back(q);
        std::sort(adj[p].begin(), adj[p].end());
        adj[p].erase(std::unique(adj[p].begin(), adj[p].end()), adj[p].end());
    }
    return adj;
}

}  // namespace reachkit
