#pragma once

// Codes presented by automata: the first return words of a state, truncated
// at a length bound, and the word-level predicates run on such samples.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "analysis.hpp"
#include "errors.hpp"
#include "nfa.hpp"

namespace reachkit {

/// Words ordered by length, then lexicographically.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct FiniteCodeSample {
    std::set<Word, ShortLex> words;
    std::size_t length_bound = 0;
};

/// All words of length 1..length_bound labelling a path from q to q that does
/// not visit q in between.
inline FiniteCodeSample first_return_words(const Nfa& nfa, State q, std::size_t length_bound) {
    nfa.check_state(q);
    if (length_bound == 0) throw ContractError("first_return_words: length bound must be at least 1");
    FiniteCodeSample out{{}, length_bound};
    struct Item {
        Word word;
        StateSet away;  // states reachable by `word` without touching q after the start
    };
    std::deque<Item> queue;
    queue.push_back({{}, StateSet(nfa.num_states(), {q})});
    while (!queue.empty()) {
        Item cur = std::move(queue.front());
        queue.pop_front();
        for (Letter x = 0; x < nfa.num_letters(); ++x) {
            StateSet next = step(nfa, cur.away, x);
            Word w = cur.word;
            w.push_back(x);
            if (next.contains(q)) {
                out.words.insert(w);
                next.erase(q);
            }
            if (!next.empty() && w.size() < length_bound) queue.push_back({std::move(w), std::move(next)});
        }
    }
    return out;
}

/// Number of factorizations of `w` over the sample, saturating at `cap`.
inline std::size_t count_factorizations(const FiniteCodeSample& sample, const Word& w, std::size_t cap = 1u << 20) {
    std::vector<std::size_t> ways(w.size() + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (ways[i] == 0) continue;
        for (const Word& x : sample.words) {
            if (x.empty() || i + x.size() > w.size()) continue;
            if (std::equal(x.begin(), x.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
                ways[i + x.size()] = std::min(cap, ways[i + x.size()] + ways[i]);
        }
    }
    return ways[w.size()];
}

struct CodeCheck {
    bool is_code = true;
    std::optional<Word> witness;            ///< a shortest word with two factorizations
    std::vector<Word> first, second;        ///< two distinct factorizations of the witness
};

/// Decides whether every concatenation of sample words of total length at most
/// `test_bound` has a unique factorization. The empty word in the sample makes
/// it a non-code with the empty witness.
inline CodeCheck is_code_up_to(const FiniteCodeSample& sample, std::size_t test_bound) {
    CodeCheck r;
    if (sample.words.contains(Word{})) {
        r.is_code = false;
        r.witness = Word{};
        r.first = {Word{}};
        r.second = {Word{}, Word{}};
        return r;
    }
    // one factorization per concatenation, discovered in short-lex order
    std::map<Word, std::vector<Word>, ShortLex> seen{{Word{}, {}}};
    for (auto it = seen.begin(); it != seen.end(); ++it) {
        for (const Word& x : sample.words) {
            if (it->first.size() + x.size() > test_bound) continue;
            Word u = it->first;
            u.insert(u.end(), x.begin(), x.end());
            std::vector<Word> f = it->second;
            f.push_back(x);
            auto [pos, inserted] = seen.emplace(u, f);
            if (inserted) continue;
            if (!r.witness || ShortLex{}(u, *r.witness)) {
                r.is_code = false;
                r.witness = u;
                r.first = pos->second;
                r.second = std::move(f);
            }
        }
    }
    return r;
}

/// No sample word is a proper prefix of another.
inline bool is_prefix_code(const FiniteCodeSample& sample) {
    struct Node {
        std::map<Letter, std::size_t> child;
        bool terminal = false;
    };
    std::vector<Node> trie(1);
    // ShortLex order inserts every prefix before its extensions
    for (const Word& w : sample.words) {
        std::size_t cur = 0;
        for (Letter x : w) {
            if (trie[cur].terminal) return false;
            auto it = trie[cur].child.find(x);
            if (it == trie[cur].child.end()) {
                trie[cur].child.emplace(x, trie.size());
                cur = trie.size();
                trie.emplace_back();
            } else {
                cur = it->second;
            }
        }
        if (trie[cur].terminal || !trie[cur].child.empty()) return false;
        trie[cur].terminal = true;
    }
    return true;
}

/// Completeness of the code of first return words of q, which coincides with
/// completeness of the automaton when it is strongly connected and unambiguous.
inline bool code_complete(const Nfa& nfa, State q, const CompletenessOptions& opts = {}) {
    nfa.check_state(q);
    if (!is_strongly_connected(nfa)) throw ContractError("code_complete: automaton is not strongly connected");
    if (!is_unambiguous(nfa).unambiguous) throw ContractError("code_complete: automaton is ambiguous");
    return is_complete(nfa, opts).complete;
}

/// A word mapping every state to q: a reset word followed by a shortest path
/// into q. Absent iff the DFA is not synchronising.
inline std::optional<Word> code_synchronizing_word(const Nfa& dfa, State q) {
    dfa.check_state(q);
    if (!is_total_dfa(dfa)) throw ContractError("code_synchronizing_word: input is not a total DFA");
    if (!is_strongly_connected(dfa)) throw ContractError("code_synchronizing_word: automaton is not strongly connected");
    auto sync = is_synchronising(dfa);
    if (!sync.synchronising) return std::nullopt;
    Word w = *sync.reset_word;
    const State from = static_cast<State>(dfa_run(dfa, 0, w));

    const std::size_t n = dfa.num_states();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, Letter>> parent(n, {unset, 0});
    std::deque<State> queue{from};
    parent[from] = {from, 0};
    while (!queue.empty() && parent[q].first == unset) {
        State u = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < dfa.num_letters(); ++x) {
            State v = dfa.successors(u, x).front();
            if (parent[v].first != unset) continue;
            parent[v] = {u, x};
            queue.push_back(v);
        }
    }
    Word path;
    for (State v = q; v != from; v = static_cast<State>(parent[v].first)) path.push_back(parent[v].second);
    w.insert(w.end(), path.rbegin(), path.rend());
    return w;
}

}  // namespace reachkit
