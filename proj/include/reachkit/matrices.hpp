#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "errors.hpp"
#include "nfa.hpp"
#include "oracles.hpp"

namespace reachkit {

using Matrix = std::vector<std::vector<std::uint64_t>>;

/// A non-empty finite set of square nonnegative integer matrices of equal size.
struct MatrixSet {
    std::size_t dim = 0;
    std::vector<Matrix> matrices;

    void validate() const {
        if (dim == 0) throw InputError("matrix set: dim must be positive");
        if (matrices.empty()) throw InputError("matrix set: no matrices");
        for (std::size_t m = 0; m < matrices.size(); ++m) {
            if (matrices[m].size() != dim)
                throw InputError("matrix " + std::to_string(m) + " has " + std::to_string(matrices[m].size()) + " rows, expected " + std::to_string(dim));
            for (const auto& row : matrices[m])
                if (row.size() != dim) throw InputError("matrix " + std::to_string(m) + " is not square");
        }
    }

    friend bool operator==(const MatrixSet&, const MatrixSet&) = default;
};

/// (i, x, j) is a transition iff entry (i, j) of matrix x is positive.
inline Nfa to_nfa(const MatrixSet& ms) {
    ms.validate();
    Nfa a(ms.dim, ms.matrices.size());
    for (Letter x = 0; x < ms.matrices.size(); ++x)
        for (State i = 0; i < ms.dim; ++i)
            for (State j = 0; j < ms.dim; ++j)
                if (ms.matrices[x][i][j] > 0) a.add_transition(i, x, j);
    return a;
}

/// The 0/1 transition matrices of an NFA, one per letter.
inline MatrixSet from_nfa(const Nfa& nfa) {
    MatrixSet ms{nfa.num_states(), {}};
    for (Letter x = 0; x < nfa.num_letters(); ++x) {
        Matrix m(ms.dim, std::vector<std::uint64_t>(ms.dim, 0));
        for (State i = 0; i < ms.dim; ++i)
            for (State j : nfa.successors(i, x)) m[i][j] = 1;
        ms.matrices.push_back(std::move(m));
    }
    return ms;
}

inline bool is_irreducible(const MatrixSet& ms) { return is_strongly_connected(to_nfa(ms)); }

/// Product of matrices along a word. Entries saturate at the uint64 maximum
/// and `overflowed` records that it happened; zero and positive entries are
/// always exact.
struct MatrixProduct {
    Matrix value;
    bool overflowed = false;
};

inline MatrixProduct product(const MatrixSet& ms, const Word& w) {
    ms.validate();
    constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    const std::size_t n = ms.dim;
    MatrixProduct r{Matrix(n, std::vector<std::uint64_t>(n, 0)), false};
    for (std::size_t i = 0; i < n; ++i) r.value[i][i] = 1;
    for (Letter x : w) {
        if (x >= ms.matrices.size()) throw InputError("letter " + letter_name(x) + " out of range for matrix set");
        const Matrix& m = ms.matrices[x];
        Matrix next(n, std::vector<std::uint64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (r.value[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (m[k][j] == 0) continue;
                    std::uint64_t term;
                    if (__builtin_mul_overflow(r.value[i][k], m[k][j], &term)) {
                        term = top;
                        r.overflowed = true;
                    }
                    if (__builtin_add_overflow(next[i][j], term, &next[i][j])) {
                        next[i][j] = top;
                        r.overflowed = true;
                    }
                }
            }
        r.value = std::move(next);
    }
    return r;
}

inline bool is_zero(const Matrix& m) {
    for (const auto& row : m)
        for (auto v : row)
            if (v != 0) return false;
    return true;
}

/// Index of a column with only positive entries, if any.
inline std::optional<std::size_t> positive_column(const Matrix& m) {
    if (m.empty()) return std::nullopt;
    for (std::size_t j = 0; j < m.front().size(); ++j) {
        bool all = true;
        for (const auto& row : m) all = all && row[j] > 0;
        if (all) return j;
    }
    return std::nullopt;
}

/// A shortest word whose product is the zero matrix, or nullopt when the
/// generated monoid avoids zero.
inline std::optional<Word> mortality_witness(const MatrixSet& ms, std::size_t max_states = oracles::default_max_states) {
    auto w = oracles::shortest_mortal_word(to_nfa(ms), max_states);
    if (w && !is_zero(product(ms, *w).value)) throw CertificationError("mortality", "product along " + format_word(*w) + " is not zero");
    return w;
}

/// A shortest word whose product has a strictly positive column. Only defined
/// when the positivity pattern is a total DFA.
inline std::optional<Word> ergodicity_witness(const MatrixSet& ms, std::size_t max_states = oracles::default_max_states) {
    const Nfa a = to_nfa(ms);
    if (!is_total_dfa(a)) throw ContractError("ergodicity_witness: positivity pattern is not a total DFA");
    auto w = oracles::shortest_reset_word(a, max_states);
    if (w && !positive_column(product(ms, *w).value)) throw CertificationError("ergodicity", "product along " + format_word(*w) + " has no positive column");
    return w;
}

}  // namespace reachkit
