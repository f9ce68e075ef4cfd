#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace reachkit;
using fixtures::diamond_nfa;

namespace {

Nfa random_partial_dfa(Rng& rng, std::size_t n, std::size_t k) {
    Nfa a(n, k);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x)
            if (rng.below(5) != 0) a.add_transition(q, x, static_cast<State>(rng.below(n)));
    return a;
}

void expect_valid_diamond(const Nfa& a, const Diamond& d) {
    Word w1(d.word.begin(), d.word.begin() + static_cast<std::ptrdiff_t>(d.split));
    Word w2(d.word.begin() + static_cast<std::ptrdiff_t>(d.split), d.word.end());
    EXPECT_NE(d.t1, d.t2);
    auto mid = apply(a, d.p, w1);
    EXPECT_TRUE(mid.contains(d.t1));
    EXPECT_TRUE(mid.contains(d.t2));
    EXPECT_TRUE(apply(a, d.t1, w2).contains(d.q));
    EXPECT_TRUE(apply(a, d.t2, w2).contains(d.q));
    EXPECT_GE(count_paths(a, d.p, d.word, d.q), 2u);
}

}  // namespace

TEST(StrongConnectivity, DiamondIsStronglyConnected) { EXPECT_TRUE(is_strongly_connected(diamond_nfa())); }

TEST(StrongConnectivity, Examples) {
    EXPECT_TRUE(is_strongly_connected(fixtures::rotate_merge3()));
    EXPECT_TRUE(is_strongly_connected(fixtures::merge_dfa()));
    EXPECT_FALSE(is_strongly_connected(fixtures::drain_dfa()));
    EXPECT_TRUE(is_strongly_connected(Nfa(1, 1)));
    EXPECT_FALSE(is_strongly_connected(Nfa(2, 1)));
}

TEST(Period, Examples) {
    EXPECT_EQ(period(diamond_nfa()), 1u);
    EXPECT_EQ(period(fixtures::period_two_dfa()), 2u);
    EXPECT_EQ(period(fixtures::chord_cycle(4)), 1u);
    EXPECT_EQ(period(Nfa(3, 1)), 0u);
    Nfa six(6, 1);
    for (State q = 0; q < 6; ++q) six.add_transition(q, 0, (q + 1) % 6);
    six.add_transition(0, 0, 4);  // adds a cycle of length 3
    EXPECT_EQ(period(six), 3u);
}

TEST(Period, MatchesClosedWalksOnStronglyConnected) {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Nfa a = random_nfa(rng, 1 + rng.below(7), 1 + rng.below(2), 0.2);
        if (!is_strongly_connected(a)) continue;
        EXPECT_EQ(period(a), fixtures::period_by_walks(a));
    }
}

TEST(ImageBound, DiamondIsTwoBounded) {
    EXPECT_TRUE(image_bound_check(diamond_nfa(), 2).bounded);
    auto r = image_bound_check(diamond_nfa(), 1);
    EXPECT_FALSE(r.bounded);
    ASSERT_TRUE(r.state);
    EXPECT_GT(apply(diamond_nfa(), *r.state, r.word).size(), 1u);
    EXPECT_THROW(image_bound_check(diamond_nfa(), 0), ContractError);
}

TEST(ImageBound, ChordCycleIsNotTwoBounded) {
    for (std::size_t m = 3; m <= 7; ++m) {
        auto r = image_bound_check(fixtures::chord_cycle(m), 2);
        EXPECT_FALSE(r.bounded);
        EXPECT_EQ(apply(fixtures::chord_cycle(m), *r.state, r.word).size(), 3u);
    }
}

TEST(ImageBound, OneBoundedIffDfa) {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Nfa a = random_nfa(rng, 1 + rng.below(6), 1 + rng.below(3), 0.15 + 0.1 * static_cast<double>(rng.below(3)));
        EXPECT_EQ(image_bound_check(a, 1).bounded, is_dfa(a));
    }
}

TEST(ImageBound, MatchesFrontierOracle) {
    Rng rng(4);
    for (int i = 0; i < 300; ++i) {
        Nfa a = random_nfa(rng, 1 + rng.below(7), 1 + rng.below(3), 0.2);
        const std::size_t frontier = oracles::image_size_frontier(a);
        for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(image_bound_check(a, k).bounded, frontier <= k);
    }
}

TEST(Completeness, DiamondIsIncompleteWithBb) {
    auto r = is_complete(diamond_nfa());
    EXPECT_FALSE(r.complete);
    EXPECT_EQ(r.method, "2-image-bounded");
    ASSERT_TRUE(r.mortal_word);
    EXPECT_EQ(format_word(*r.mortal_word), "bb");
}

TEST(Completeness, TotalDfaIsComplete) {
    auto r = is_complete(fixtures::merge_dfa());
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.method, "dfa");
    EXPECT_FALSE(r.mortal_word);
}

TEST(Completeness, PartialDfaTokenElimination) {
    // 0 -a-> 1, 1 -a-> 0, 1 -b-> 1; b undefined at 0 kills 0, then a then b kills 1
    Nfa a(2, 2, {{{1}, {}}, {{0}, {1}}});
    auto r = is_complete_dfa(a);
    EXPECT_FALSE(r.complete);
    EXPECT_TRUE(apply(a, all_states(a), *r.mortal_word).empty());
    EXPECT_THROW(is_complete_dfa(diamond_nfa()), ContractError);
}

TEST(Completeness, PartialDfasMatchOracle) {
    Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        Nfa a = random_partial_dfa(rng, 1 + rng.below(10), 1 + rng.below(3));
        auto r = is_complete_dfa(a);
        auto oracle = oracles::shortest_mortal_word(a);
        EXPECT_EQ(r.complete, !oracle.has_value());
        if (r.mortal_word) { EXPECT_TRUE(apply(a, all_states(a), *r.mortal_word).empty()); }
    }
}

TEST(Completeness, TwoBoundedMatchesOracle) {
    Rng rng(18);
    for (int i = 0; i < 300; ++i) {
        Nfa a = random_2ib_nfa(rng, 1 + rng.below(7), 1 + rng.below(3));
        auto r = is_complete_2ib(a);
        EXPECT_EQ(r.complete, !oracles::shortest_mortal_word(a).has_value());
        if (r.mortal_word) { EXPECT_TRUE(apply(a, all_states(a), *r.mortal_word).empty()); }
    }
    EXPECT_THROW(is_complete_2ib(fixtures::chord_cycle(3)), ContractError);
}

TEST(Completeness, PowerSetFallbackGuard) {
    Nfa big = fixtures::chord_cycle(30);
    EXPECT_THROW(is_complete(big), ResourceError);
    CompletenessOptions forced{true, 22};
    auto r = is_complete(fixtures::chord_cycle(23), forced);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.method, "power-set");
    CompletenessOptions raised{false, 30};
    EXPECT_TRUE(is_complete(big, raised).complete);
}

TEST(Completeness, PowerSetFindsMortalWord) {
    Nfa a = fixtures::chord_cycle(4);
    a.add_transition(0, 0, 2);
    Nfa b(4, 2);
    for (State q = 0; q < 4; ++q)
        for (State p : a.successors(q, 0)) b.add_transition(q, 0, p);
    b.add_transition(1, 1, 1);  // b is defined only at 1
    auto r = is_complete(b);
    EXPECT_EQ(r.method, "power-set");
    EXPECT_FALSE(r.complete);
    EXPECT_TRUE(apply(b, all_states(b), *r.mortal_word).empty());
}

TEST(Sync, Examples) {
    auto m = is_synchronising(fixtures::merge_dfa());
    EXPECT_TRUE(m.synchronising);
    EXPECT_EQ(format_word(*m.reset_word), "a");
    EXPECT_FALSE(is_synchronising(fixtures::period_two_dfa()).synchronising);
    auto c = is_synchronising(fixtures::rotate_merge3());
    EXPECT_TRUE(c.synchronising);
    EXPECT_EQ(apply(fixtures::rotate_merge3(), all_states(fixtures::rotate_merge3()), *c.reset_word).size(), 1u);
    EXPECT_THROW(is_synchronising(diamond_nfa()), ContractError);
}

TEST(Sync, TotalDfasMatchOracle) {
    Rng rng(19);
    for (int i = 0; i < 500; ++i) {
        Nfa a = random_total_dfa(rng, 1 + rng.below(10), 1 + rng.below(3));
        auto r = is_synchronising(a);
        auto oracle = oracles::shortest_reset_word(a);
        EXPECT_EQ(r.synchronising, oracle.has_value());
        EXPECT_EQ(r.synchronising, oracles::rank(a) == 1);
        if (r.reset_word) {
            EXPECT_EQ(apply(a, all_states(a), *r.reset_word).size(), 1u);
            EXPECT_GE(r.reset_word->size(), oracle->size());
        }
    }
}

TEST(Unambiguity, DiamondDiamondOnAb) {
    auto r = is_unambiguous(diamond_nfa());
    EXPECT_FALSE(r.unambiguous);
    ASSERT_TRUE(r.diamond);
    EXPECT_EQ(r.diamond->p, 0u);
    EXPECT_EQ(r.diamond->q, 2u);
    EXPECT_EQ(format_word(r.diamond->word), "ab");
    EXPECT_EQ(r.diamond->split, 1u);
    EXPECT_EQ(r.diamond->t1, 0u);
    EXPECT_EQ(r.diamond->t2, 1u);
    expect_valid_diamond(diamond_nfa(), *r.diamond);
}

TEST(Unambiguity, DfasAreUnambiguous) {
    Rng rng(20);
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(is_unambiguous(random_partial_dfa(rng, 1 + rng.below(8), 2)).unambiguous);
}

TEST(Unambiguity, NondeterministicButUnambiguous) {
    // 0 -a-> {0, 1}; 1 has no outgoing transitions: the two runs never meet
    Nfa a(2, 1, {{{0, 1}}, {{}}});
    EXPECT_TRUE(is_unambiguous(a).unambiguous);
}

TEST(Unambiguity, MatchesBoundedDiamondSearch) {
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng.below(6);
        Nfa a = random_nfa(rng, n, 1 + rng.below(2), 0.12 + 0.05 * static_cast<double>(rng.below(3)));
        auto r = is_unambiguous(a);
        auto oracle = oracles::diamond_search_bounded(a, n * n);
        EXPECT_EQ(r.unambiguous, !oracle.has_value());
        if (r.diamond) {
            expect_valid_diamond(a, *r.diamond);
            EXPECT_EQ(r.diamond->word.size(), oracle->word.size());
        }
    }
}
