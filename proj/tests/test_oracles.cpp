#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace reachkit;
using fixtures::diamond_nfa;

TEST(MortalOracle, DiamondShortestIsBb) {
    auto w = oracles::shortest_mortal_word(diamond_nfa());
    ASSERT_TRUE(w);
    EXPECT_EQ(format_word(*w), "bb");
}

TEST(MortalOracle, TotalDfaHasNone) { EXPECT_FALSE(oracles::shortest_mortal_word(fixtures::rotate_merge3())); }

TEST(MortalOracle, EmptyRelationDiesOnFirstLetter) {
    auto w = oracles::shortest_mortal_word(Nfa(3, 2));
    ASSERT_TRUE(w);
    EXPECT_EQ(format_word(*w), "a");
}

TEST(ResetOracle, RotateMergeNeedsFourLetters) {
    auto w = oracles::shortest_reset_word(fixtures::rotate_merge3());
    ASSERT_TRUE(w);
    EXPECT_EQ(w->size(), 4u);
    EXPECT_EQ(format_word(*w), "baab");
}

TEST(ResetOracle, Examples) {
    EXPECT_EQ(format_word(*oracles::shortest_reset_word(fixtures::merge_dfa())), "a");
    EXPECT_FALSE(oracles::shortest_reset_word(fixtures::period_two_dfa()));
    EXPECT_EQ(oracles::shortest_reset_word(Nfa(1, 1, {{{0}}}))->size(), 0u);
    EXPECT_THROW(oracles::shortest_reset_word(diamond_nfa()), ContractError);
}

TEST(Rank, Examples) {
    EXPECT_EQ(oracles::rank(fixtures::rotate_merge3()), 1u);
    EXPECT_EQ(oracles::rank(fixtures::period_two_dfa()), 2u);
    Nfa id(4, 1);
    for (State q = 0; q < 4; ++q) id.add_transition(q, 0, q);
    EXPECT_EQ(oracles::rank(id), 4u);
    EXPECT_THROW(oracles::rank(diamond_nfa()), ContractError);
}

TEST(Frontier, Examples) {
    EXPECT_EQ(oracles::image_size_frontier(diamond_nfa()), 2u);
    EXPECT_EQ(oracles::image_size_frontier(fixtures::rotate_merge3()), 1u);
    EXPECT_EQ(oracles::image_size_frontier(Nfa(2, 1)), 1u);
    EXPECT_EQ(oracles::image_size_frontier(fixtures::chord_cycle(5)), 5u);
}

TEST(DiamondOracle, Diamond) {
    auto d = oracles::diamond_search_bounded(diamond_nfa(), 9);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->p, 0u);
    EXPECT_EQ(d->q, 2u);
    EXPECT_EQ(format_word(d->word), "ab");
    EXPECT_FALSE(oracles::diamond_search_bounded(diamond_nfa(), 1));
}

TEST(Guard, OversizedInputsAreRefused) {
    Nfa big = fixtures::chord_cycle(21);
    EXPECT_THROW(oracles::shortest_mortal_word(big), ResourceError);
    EXPECT_THROW(oracles::image_size_frontier(big), ResourceError);
    EXPECT_NO_THROW(oracles::shortest_mortal_word(big, 21));
    try {
        oracles::shortest_mortal_word(big);
    } catch (const ResourceError& e) {
        EXPECT_EQ(e.limit(), oracles::default_max_states);
    }
}

// Oracle answers agree with each other on random inputs.
TEST(OracleInvariants, RandomInputs) {
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng.below(7);
        Nfa a = random_nfa(rng, n, 1 + rng.below(3), 0.2);
        auto mortal = oracles::shortest_mortal_word(a);
        if (mortal) {
            EXPECT_TRUE(apply(a, all_states(a), *mortal).empty());
            // no proper prefix is already mortal
            Word prefix(mortal->begin(), mortal->end() - 1);
            EXPECT_FALSE(apply(a, all_states(a), prefix).empty());
        }
        EXPECT_LE(oracles::image_size_frontier(a), n);

        Nfa d = random_total_dfa(rng, n, 1 + rng.below(3));
        auto reset = oracles::shortest_reset_word(d);
        const std::size_t r = oracles::rank(d);
        EXPECT_EQ(reset.has_value(), r == 1);
        if (reset) { EXPECT_LE(reset->size(), (n * n * n - n) / 6); }
        EXPECT_EQ(oracles::image_size_frontier(d), 1u);
    }
}
