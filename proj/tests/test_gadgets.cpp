#include <gtest/gtest.h>

#include <unordered_set>

#include "fixtures.hpp"

using namespace reachkit;

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_list(const Digraph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.from, e.to);
    std::sort(out.begin(), out.end());
    return out;
}

void expect_injective_names(const GadgetInstance& g) {
    ASSERT_EQ(g.state_names.size(), g.automaton.num_states());
    std::unordered_set<std::string> seen;
    for (const auto& name : g.state_names) {
        EXPECT_FALSE(name.empty());
        EXPECT_TRUE(seen.insert(name).second) << "duplicate state name " << name;
    }
}

// Instances whose three gadgets all fit under the oracle guard.
std::vector<ConstrainedInstance> sweep_instances(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<ConstrainedInstance> out;
    while (out.size() < count) {
        auto inst = random_constrained_instance(rng, 2 + rng.below(3));
        if (sync_gadget(inst).automaton.num_states() <= 20 && completeness_gadget(inst).automaton.num_states() <= 20)
            out.push_back(inst);
    }
    return out;
}

}  // namespace

// ---- layered reduction ------------------------------------------------------

TEST(Layered, PathOfThreeMatchesHandDrawnLayers) {
    auto out = layered_reduction(fixtures::path3(), 0, 2);
    EXPECT_EQ(out.n, 3u);
    EXPECT_EQ(out.s, 0u);
    EXPECT_EQ(out.t, 9u);
    EXPECT_EQ(out.graph.num_vertices(), 10u);
    std::vector<std::pair<Vertex, Vertex>> want{{0, 4}, {1, 8}, {2, 5}, {3, 7}, {4, 9}, {5, 8}, {6, 9}, {7, 9}, {8, 9}};
    EXPECT_EQ(edge_list(out.graph), want);
    EXPECT_EQ(st_path_lengths(out.graph, out.s, out.t), (std::vector<std::size_t>{2}));
    EXPECT_TRUE(verify_promises(out).all());
    EXPECT_TRUE(shortcut_exists(out));
}

TEST(Layered, TwoIsolatedVertices) {
    auto out = layered_reduction(Digraph(2), 0, 1);
    EXPECT_EQ(out.n, 2u);
    EXPECT_EQ(out.graph.num_vertices(), 5u);
    EXPECT_EQ(st_path_lengths(out.graph, out.s, out.t), (std::vector<std::size_t>{2}));
    EXPECT_TRUE(verify_promises(out).all());
    EXPECT_FALSE(shortcut_exists(out));
}

TEST(Layered, CyclicInputIsAccepted) {
    Digraph g(3, {{0, 1}, {1, 0}, {1, 2}});
    auto out = layered_reduction(g, 0, 2);
    EXPECT_TRUE(verify_promises(out).all());
    EXPECT_TRUE(shortcut_exists(out));
}

TEST(Layered, SourceEqualsTargetIsDocumented) {
    // G trivially has an (s, s)-path; the reduction only certifies s != t
    auto out = layered_reduction(Digraph(2, {{0, 1}}), 0, 0);
    EXPECT_TRUE(verify_promises(out).all());
    EXPECT_FALSE(shortcut_exists(out));
}

TEST(Layered, IffOnRandomGraphs) {
    Rng rng(12);
    for (int i = 0; i < 150; ++i) {
        const std::size_t size = 2 + rng.below(5);
        Digraph g(size);
        for (Vertex u = 0; u < size; ++u)
            for (Vertex v = 0; v < size; ++v)
                if (u != v && rng.chance(0.3)) g.add_edge(u, v);
        const Vertex t = static_cast<Vertex>(1 + rng.below(size - 1));
        auto out = layered_reduction(g, 0, t);
        EXPECT_TRUE(verify_promises(out).all());
        EXPECT_EQ(shortcut_exists(out), static_cast<bool>(reachable(g, 0)[t]));
    }
}

// ---- intro gadgets ----------------------------------------------------------

TEST(IntroGadgets, DagWithoutPathGivesExpectedDfa) {
    // vertices in order s, 2, 1, 3, t, 4
    Digraph g(6, {{0, 2}, {2, 3}, {1, 5}, {2, 5}});
    auto gc = intro_dfa_completeness_gadget(g, 0, 4);
    Nfa want(5, 2, {{{2}, {4}}, {{3}, {4}}, {{4}, {4}}, {{}, {}}, {{0}, {0}}});
    EXPECT_EQ(gc.automaton, want);
    EXPECT_EQ(gc.state_names, (std::vector<std::string>{"s", "v1", "v2", "t", "t'"}));
    EXPECT_TRUE(gc.ground_truth.value);
    EXPECT_FALSE(gc.shortcut_exists);
    EXPECT_FALSE(gc.witness);
    EXPECT_TRUE(is_complete(gc.automaton).complete);

    auto gs = intro_sync_gadget(g, 0, 4);
    EXPECT_TRUE(is_total_dfa(gs.automaton));
    EXPECT_FALSE(gs.ground_truth.value);
    EXPECT_FALSE(oracles::shortest_reset_word(gs.automaton));
}

TEST(IntroGadgets, PathGivesMortalAndResetWords) {
    auto gc = intro_dfa_completeness_gadget(fixtures::path3(), 0, 2);
    EXPECT_FALSE(gc.ground_truth.value);
    ASSERT_TRUE(gc.witness);
    EXPECT_TRUE(apply(gc.automaton, all_states(gc.automaton), *gc.witness).empty());
    auto gs = intro_sync_gadget(fixtures::path3(), 0, 2);
    ASSERT_TRUE(gs.witness);
    EXPECT_EQ(apply(gs.automaton, all_states(gs.automaton), *gs.witness).size(), 1u);
    EXPECT_TRUE(verify_gadget(gc).ok());
    EXPECT_TRUE(verify_gadget(gs).ok());
}

TEST(IntroGadgets, CyclicInputIsRejected) {
    EXPECT_THROW(intro_dfa_completeness_gadget(Digraph(2, {{0, 1}, {1, 0}}), 0, 1), ContractError);
}

TEST(IntroGadgets, RandomDagsMatchReachability) {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        auto r = random_acyclic_digraph(rng, 2 + rng.below(7));
        const bool path = reachable(r.graph, r.s)[r.t];
        auto gc = intro_dfa_completeness_gadget(r.graph, r.s, r.t);
        auto gs = intro_sync_gadget(r.graph, r.s, r.t);
        EXPECT_TRUE(is_dfa(gc.automaton));
        EXPECT_EQ(gc.automaton.num_letters(), 2u);
        EXPECT_EQ(!oracles::shortest_mortal_word(gc.automaton).has_value(), !path);
        EXPECT_EQ(oracles::shortest_reset_word(gs.automaton).has_value(), path);
        expect_injective_names(gc);
        EXPECT_TRUE(verify_gadget(gc).ok());
        EXPECT_TRUE(verify_gadget(gs).ok());
    }
}

// ---- constrained gadgets ----------------------------------------------------

TEST(SyncGadget, ShortcutInstance) {
    auto g = sync_gadget(fixtures::shortcut_instance());
    EXPECT_TRUE(g.shortcut_exists);
    EXPECT_TRUE(g.ground_truth.value);
    EXPECT_EQ(g.automaton.num_states(), 4u + 2 * 3 + 2 * 3 + 3);
    ASSERT_TRUE(g.witness);
    EXPECT_EQ(format_word(*g.witness), "baaaaa");
    auto r1 = *g.state_named("r1"), r2 = *g.state_named("r2");
    EXPECT_EQ(apply(g.automaton, StateSet(g.automaton.num_states(), {r1, r2}), *g.witness),
              StateSet(g.automaton.num_states(), {r2}));
    EXPECT_TRUE(verify_gadget(g).ok());
    expect_injective_names(g);
}

TEST(SyncGadget, NoShortcutInstance) {
    auto g = sync_gadget(fixtures::no_shortcut_instance());
    EXPECT_FALSE(g.ground_truth.value);
    EXPECT_FALSE(g.witness);
    EXPECT_FALSE(oracles::shortest_reset_word(g.automaton));
    EXPECT_EQ(oracles::rank(g.automaton), 2u);
}

TEST(SyncGadget, PromiseViolationIsContractError) {
    ConstrainedInstance bad{Digraph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2, 3};
    EXPECT_THROW(sync_gadget(bad), ContractError);
    EXPECT_THROW(completeness_gadget(bad), ContractError);
    EXPECT_THROW(unambiguity_gadget(bad), ContractError);
}

TEST(CompletenessGadget, ShortcutInstance) {
    auto g = completeness_gadget(fixtures::shortcut_instance());
    EXPECT_FALSE(g.ground_truth.value);
    ASSERT_TRUE(g.witness);
    EXPECT_EQ(format_word(*g.witness), "caaccaac");
    EXPECT_TRUE(apply(g.automaton, all_states(g.automaton), *g.witness).empty());
    EXPECT_TRUE(verify_gadget(g).ok());
    expect_injective_names(g);
    EXPECT_TRUE(g.state_named("f"));
}

TEST(CompletenessGadget, NoShortcutInstance) {
    auto g = completeness_gadget(fixtures::no_shortcut_instance());
    EXPECT_TRUE(g.ground_truth.value);
    EXPECT_FALSE(oracles::shortest_mortal_word(g.automaton));
    EXPECT_TRUE(is_unambiguous(g.automaton).unambiguous);
    EXPECT_TRUE(image_bound_check(g.automaton, 2).bounded);
    EXPECT_TRUE(is_complete(g.automaton).complete);
}

TEST(UnambiguityGadget, ShortcutInstance) {
    auto g = unambiguity_gadget(fixtures::shortcut_instance());
    EXPECT_FALSE(g.ground_truth.value);
    ASSERT_TRUE(g.witness);
    EXPECT_EQ(format_word(*g.witness), "caac");
    State f = *g.state_named("f");
    EXPECT_EQ(count_paths(g.automaton, f, *g.witness, f), 2u);
    EXPECT_FALSE(is_unambiguous(g.automaton).unambiguous);
    EXPECT_TRUE(verify_gadget(g).ok());
    expect_injective_names(g);
}

TEST(UnambiguityGadget, NoShortcutInstance) {
    auto g = unambiguity_gadget(fixtures::no_shortcut_instance());
    EXPECT_TRUE(g.ground_truth.value);
    EXPECT_TRUE(is_unambiguous(g.automaton).unambiguous);
    EXPECT_FALSE(oracles::shortest_mortal_word(g.automaton));
    EXPECT_TRUE(is_strongly_connected(g.automaton));
}

TEST(UnambiguityGadget, UnreachableVerticesAreDropped) {
    // vertex 1 is not reachable from s = 0
    ConstrainedInstance inst{Digraph(3, {{0, 2}, {1, 2}}), 0, 2, 2};
    auto g = unambiguity_gadget(inst);
    EXPECT_EQ(g.automaton.num_states(), 2u + 1 + 2);
    EXPECT_FALSE(g.state_named("V:v1"));
    EXPECT_TRUE(verify_gadget(g).ok());
}

TEST(ConstrainedGadgets, SweepAgainstOracles) {
    for (const auto& inst : sweep_instances(14, 120)) {
        const bool shortcut = shortcut_exists(inst);
        auto gs = sync_gadget(inst);
        EXPECT_EQ(oracles::shortest_reset_word(gs.automaton).has_value(), shortcut);
        EXPECT_TRUE(is_strongly_connected(gs.automaton));
        EXPECT_LE(oracles::rank(gs.automaton), 2u);

        auto gc = completeness_gadget(inst);
        EXPECT_EQ(!oracles::shortest_mortal_word(gc.automaton).has_value(), !shortcut);
        EXPECT_EQ(is_complete(gc.automaton).complete, !shortcut);
        EXPECT_TRUE(is_unambiguous(gc.automaton).unambiguous);

        auto gu = unambiguity_gadget(inst);
        EXPECT_EQ(!oracles::diamond_search_bounded(gu.automaton, gu.automaton.num_states() * gu.automaton.num_states()).has_value(), !shortcut);
        EXPECT_FALSE(oracles::shortest_mortal_word(gu.automaton));

        for (const auto* g : {&gs, &gc, &gu}) {
            auto cert = verify_gadget(*g);
            EXPECT_TRUE(cert.ok()) << g->family << ": " << (cert.first_failure() ? cert.first_failure()->claim : "");
            expect_injective_names(*g);
        }
    }
}

TEST(ConstrainedGadgets, Deterministic) {
    auto inst = fixtures::small_constrained(3, 1, 6).front();
    EXPECT_EQ(sync_gadget(inst).automaton, sync_gadget(inst).automaton);
    EXPECT_EQ(completeness_gadget(inst).state_names, completeness_gadget(inst).state_names);
    EXPECT_EQ(unambiguity_gadget(inst).witness, unambiguity_gadget(inst).witness);
}

// ---- binarize ---------------------------------------------------------------

TEST(Binarize, OneStateOneLetter) {
    Nfa a(1, 1, {{{0}}});
    Nfa b = binarize(a);
    EXPECT_EQ(b.num_states(), 3u);
    EXPECT_EQ(b.num_letters(), 2u);
    EXPECT_TRUE(is_strongly_connected(b));
}

TEST(Binarize, TooManyLetters) { EXPECT_THROW(binarize(Nfa(1, 5)), ContractError); }

TEST(Binarize, WordEncoding) {
    EXPECT_EQ(binarize_word(Word{0, 1, 2, 3}), (Word{0, 0, 0, 1, 1, 0, 1, 1}));
    Nfa a = fixtures::diamond_nfa();
    Nfa b = binarize(a);
    Word w = parse_word("ab", 2);
    StateSet img = apply(b, 0, binarize_word(w));
    EXPECT_EQ(img, StateSet(b.num_states(), {2}));
}

TEST(Binarize, PreservesVerdictsOnGadgets) {
    for (const auto& inst : sweep_instances(15, 40)) {
        for (const auto& g : {completeness_gadget(inst), unambiguity_gadget(inst)}) {
            Nfa b = binarize(g.automaton);
            EXPECT_EQ(b.num_letters(), 2u);
            EXPECT_EQ(is_strongly_connected(b), is_strongly_connected(g.automaton));
            EXPECT_EQ(is_unambiguous(b).unambiguous, is_unambiguous(g.automaton).unambiguous);
            EXPECT_EQ(is_complete(b, {true, 22}).complete, is_complete(g.automaton).complete);
        }
    }
}

TEST(Binarize, PreservesVerdictsOnRandomNfas) {
    Rng rng(16);
    for (int i = 0; i < 200; ++i) {
        Nfa a = random_nfa(rng, 1 + rng.below(4), 1 + rng.below(4), 0.25);
        Nfa b = binarize(a);
        EXPECT_EQ(oracles::shortest_mortal_word(a).has_value(), oracles::shortest_mortal_word(b).has_value());
        EXPECT_EQ(is_unambiguous(a).unambiguous, is_unambiguous(b).unambiguous);
        if (!is_strongly_connected(a)) continue;
        EXPECT_TRUE(is_strongly_connected(b));
    }
}

// ---- certification ----------------------------------------------------------

TEST(Certification, FlippedGroundTruthFails) {
    auto g = sync_gadget(fixtures::shortcut_instance());
    g.ground_truth.value = !g.ground_truth.value;
    auto cert = verify_gadget(g);
    EXPECT_FALSE(cert.ok());
    EXPECT_THROW(certify(g), CertificationError);
}

TEST(Certification, TamperedWitnessFails) {
    auto g = completeness_gadget(fixtures::shortcut_instance());
    g.witness->pop_back();
    auto cert = verify_gadget(g);
    ASSERT_FALSE(cert.ok());
    EXPECT_EQ(cert.first_failure()->claim, "witness");
}

TEST(Certification, WrongShortcutLabelFails) {
    auto g = unambiguity_gadget(fixtures::no_shortcut_instance());
    g.shortcut_exists = true;
    auto cert = verify_gadget(g);
    ASSERT_FALSE(cert.ok());
    EXPECT_EQ(cert.first_failure()->claim, "shortcut-label");
}

TEST(Certification, OversizedIsResourceError) {
    auto g = sync_gadget(fixtures::shortcut_instance());
    EXPECT_THROW(verify_gadget(g, 5), ResourceError);
}
