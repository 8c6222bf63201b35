#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/position_text.hpp"
#include "cgt/verify/checks.hpp"

namespace cgt::verify {
namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::uint64_t power(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

template <class Ps>
std::vector<std::string> texts(const Ps& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps) {
        out.push_back(format_position(p));
    }
    return out;
}

TEST(Enumerate, Examples)
{
    EXPECT_EQ(texts(enumerate_nim(2, 2)), (std::vector<std::string>{"()", "(1)", "(2)", "(1,1)", "(1,2)", "(2,2)"}));
    EXPECT_EQ(texts(enumerate_antonim(2, 3)),
              (std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}"}));
    EXPECT_EQ(texts(enumerate_tower(1, 2)), (std::vector<std::string>{"()", "(1)", "(2)"}));
    EXPECT_EQ(enumerate_positions(Ruleset::Antonim, 2, 3),
              (std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}"}));
}

TEST(Enumerate, CountsMatchCountingFormulas)
{
    // Multisets of size k from m values: C(m+k-1, k).
    std::uint64_t multisets = 0;
    for (std::uint64_t k = 0; k <= 5; ++k) {
        multisets += choose(6 + k - 1, k);
    }
    EXPECT_EQ(enumerate_greedy(5, 6).size(), multisets);
    EXPECT_EQ(multisets, 462U);
    EXPECT_EQ(enumerate_nim(4, 8).size(), choose(8 + 4, 4));

    EXPECT_EQ(enumerate_nim_tuples(4, 8).size(), 6561U);

    std::uint64_t sets = 0;
    for (std::uint64_t k = 0; k <= 3; ++k) {
        sets += choose(15, k);
    }
    EXPECT_EQ(enumerate_antonim(3, 15).size(), sets);
    EXPECT_EQ(sets, 576U);

    std::uint64_t stacks = 0;
    for (std::uint64_t k = 0; k <= 6; ++k) {
        stacks += power(5, k);
    }
    EXPECT_EQ(enumerate_tower(6, 5).size(), stacks);
    EXPECT_EQ(stacks, 19531U);

    EXPECT_EQ(enumerate_rotisserie(5, 4, 2, 5).size(), power(3, 5));

    std::uint64_t paths = 0;
    for (std::uint64_t k = 0; k <= 7; ++k) {
        paths += power(3, k);
    }
    EXPECT_EQ(enumerate_col_paths(7).size(), paths);
}

TEST(Enumerate, TreeShapesFollowWedderburnEtherington)
{
    // Rooted trees with n vertices and at most two (unordered) children per
    // vertex: 1, 1, 2, 3, 6, 11, 23 for n = 1..7.
    const std::vector<std::size_t> expected = {1, 1, 2, 3, 6, 11, 23};
    for (std::uint32_t n = 1; n <= 7; ++n) {
        std::size_t prefix = 0;
        for (std::uint32_t m = 1; m <= n; ++m) {
            prefix += expected[m - 1];
        }
        EXPECT_EQ(enumerate_tree_shapes(n).size(), prefix) << n;
    }
    // Root with exactly two children: the shapes of n - 1 vertices split in two.
    auto two = enumerate_tree_shapes(7, true);
    EXPECT_EQ(two.size(), 22U);
    EXPECT_EQ(two.front(), "U(U,U)");
    for (const auto& t : two) {
        EXPECT_EQ(parse_col_tree(t).out_neighbors(0).size(), 2U) << t;
    }
}

TEST(Enumerate, EveryPositionOnce)
{
    auto all = texts(enumerate_rotisserie(3, 4));
    std::set<std::string> unique(all.begin(), all.end());
    EXPECT_EQ(unique.size(), all.size());
}

TEST(Bounds, Validation)
{
    Bounds b;
    b.max_heaps = 0;
    EXPECT_THROW(b.validate(), std::invalid_argument);
    EXPECT_THROW(verify_nim(b), std::invalid_argument);
    Bounds missing;
    EXPECT_THROW(verify_greedy(missing), std::invalid_argument);
    EXPECT_THROW(run_suite("no-such-suite", missing), std::invalid_argument);
    EXPECT_THROW(default_bounds("no-such-suite"), std::invalid_argument);
}

TEST(Reports, JsonFieldOrderIsStable)
{
    auto r = verify_greedy(default_bounds("greedy"));
    auto j = r.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    ASSERT_GE(keys.size(), 5U);
    EXPECT_EQ(std::vector<std::string>(keys.begin(), keys.begin() + 5),
              (std::vector<std::string>{"check", "bounds", "positions_checked", "status", "mismatches"}));
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["positions_checked"], 462);
}

TEST(Reports, Deterministic)
{
    for (const char* suite : {"tower", "adj-compare", "tree-conjecture"}) {
        Bounds b = default_bounds(suite);
        if (b.max_vertices) {
            b.max_vertices = 5;
        }
        EXPECT_EQ(run_suite(suite, b).to_json().dump(), run_suite(suite, b).to_json().dump()) << suite;
        EXPECT_EQ(run_suite(suite, b).to_text(), run_suite(suite, b).to_text()) << suite;
    }
}

TEST(Reports, ZeroBasedReadingFailsAndMismatchesReproduce)
{
    VerifyOptions opt;
    opt.adjnim_indexing = AdjNimIndexing::ZeroBased;
    auto r = verify_rotisserie(default_bounds("rotisserie"), opt);
    EXPECT_EQ(r.status, Status::Fail);
    bool saw = false;
    ImpartialSolver<RotisseriePosition> solver;
    for (const auto& m : r.mismatches) {
        saw = saw || m.position == "(3,2,2)";
        EXPECT_EQ(std::string(to_string(solver.outcome(parse_rotisserie(m.position)))), m.oracle) << m.position;
    }
    EXPECT_TRUE(saw);
}

TEST(Reports, IndexingCheckNamesTheConsistentReading)
{
    auto r = check_adjnim_indexing(default_bounds("adjnim-indexing"));
    EXPECT_EQ(r.status, Status::Informational);
    EXPECT_EQ(r.details["consistent_reading"], "one-based");
    EXPECT_EQ(r.details["one_based_mismatches"], 0);
    EXPECT_GT(r.details["zero_based_mismatches"].get<int>(), 0);
}

TEST(Reports, LiteralParityReadingIsRefuted)
{
    auto r = check_tower_parity_literal(default_bounds("tower-parity-literal"));
    EXPECT_EQ(r.status, Status::Informational);
    EXPECT_EQ(r.details["total_mismatches"].get<std::uint64_t>(), r.positions_checked);
}

TEST(Checks, SmallBoundsPass)
{
    Bounds b;
    b.max_length = 3;
    b.max_heap_size = 4;
    EXPECT_EQ(check_adj_strategy(b).status, Status::Pass);
    EXPECT_EQ(check_adj_compare(b).status, Status::Pass);
    Bounds s;
    s.max_denominator = 4;
    s.max_abs_value = 2;
    auto star = check_star_lemma(s);
    EXPECT_EQ(star.status, Status::Pass);
    EXPECT_EQ(star.positions_checked, 17U);
    s.max_denominator = 6;
    EXPECT_THROW(check_star_lemma(s), std::invalid_argument);
    Bounds h;
    h.max_vertices = 4;
    EXPECT_EQ(check_head_optimality(h).status, Status::Pass);
}

TEST(Checks, TreeConjectureNeedsThreeVertices)
{
    Bounds b;
    b.max_vertices = 2;
    EXPECT_THROW(check_tree_conjecture(b), std::invalid_argument);
    b.max_vertices = 3;
    auto r = check_tree_conjecture(b);
    EXPECT_EQ(r.status, Status::Informational);
    ASSERT_EQ(r.details["trees"].size(), 1U);
    EXPECT_EQ(r.details["trees"][0]["tree"], "U(U,U)");
    EXPECT_EQ(r.details["trees"][0]["holds"], true);
    EXPECT_EQ(r.details["trees"][0]["lhs"], "*");
}

TEST(Checks, EverySuiteRunsWithDefaults)
{
    for (const auto& name : suite_names()) {
        Bounds b = default_bounds(name);
        if (name == "tree-conjecture") {
            b.max_vertices = 4;
        }
        auto r = run_suite(name, b);
        EXPECT_EQ(r.check, name);
        EXPECT_NE(r.status, Status::Fail) << name;
    }
}

} // namespace
} // namespace cgt::verify
