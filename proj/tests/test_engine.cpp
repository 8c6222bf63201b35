#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/errors.hpp"
#include "cgt/position_text.hpp"
#include "cgt/rulesets/antonim.hpp"
#include "cgt/rulesets/myopic_col.hpp"
#include "cgt/rulesets/nim.hpp"
#include "cgt/rulesets/tower_nim.hpp"
#include "cgt/verify/enumerate.hpp"

namespace cgt {
namespace {

std::vector<Nimber> nimbers(std::initializer_list<std::uint32_t> v)
{
    std::vector<Nimber> out;
    for (auto x : v) {
        out.push_back(Nimber{x});
    }
    return out;
}

TEST(Mex, Examples)
{
    EXPECT_EQ(mex(nimbers({})), Nimber{0});
    EXPECT_EQ(mex(nimbers({0, 1, 2})), Nimber{3});
    EXPECT_EQ(mex(nimbers({1, 2})), Nimber{0});
    EXPECT_EQ(mex(nimbers({2, 0, 0, 1, 5})), Nimber{3});
}

TEST(ImpartialSolver, GrundyExamples)
{
    ImpartialSolver<NimPosition> nim;
    EXPECT_EQ(nim.grundy(NimPosition{}), Nimber{0});
    EXPECT_EQ(nim.grundy(NimPosition({1, 2, 3})), Nimber{0});
    ImpartialSolver<TowerNimPosition> tower;
    EXPECT_EQ(tower.grundy(TowerNimPosition({1, 3})), Nimber{3});
}

TEST(ImpartialSolver, OutcomeExamples)
{
    ImpartialSolver<NimPosition> nim;
    EXPECT_EQ(nim.outcome(NimPosition({1})), Outcome::N);
    EXPECT_EQ(nim.outcome(NimPosition({2, 2})), Outcome::P);
    ImpartialSolver<AntonimPosition> antonim;
    EXPECT_EQ(antonim.outcome(AntonimPosition{1, 2}), Outcome::P);
}

TEST(ImpartialSolver, WinningMoves)
{
    ImpartialSolver<NimPosition> nim;
    EXPECT_TRUE(nim.winning_moves(NimPosition({1, 2, 3})).empty());
    auto moves = nim.winning_moves(NimPosition({1, 2}));
    ASSERT_EQ(moves.size(), 1U);
    EXPECT_EQ(moves[0], NimPosition({1, 1}));
    ImpartialSolver<TowerNimPosition> tower;
    auto tmoves = tower.winning_moves(TowerNimPosition({1, 1, 5}));
    ASSERT_EQ(tmoves.size(), 1U);
    EXPECT_EQ(tmoves[0], TowerNimPosition({1, 1}));
}

TEST(ImpartialSolver, GrundyZeroIffP)
{
    ImpartialSolver<TowerNimPosition> tower;
    for (const auto& p : verify::enumerate_tower(4, 4)) {
        EXPECT_EQ(tower.grundy(p).value == 0, tower.outcome(p) == Outcome::P);
        EXPECT_EQ(tower.winning_moves(p).empty(), tower.outcome(p) == Outcome::P);
    }
}

TEST(ImpartialSolver, MemoizationIsTransparent)
{
    ImpartialSolver<NimPosition> memo;
    ImpartialSolver<NimPosition> plain(EngineConfig{EngineConfig::kDefaultMemoCap, false});
    for (const auto& p : verify::enumerate_nim_tuples(3, 4)) {
        EXPECT_EQ(memo.grundy(p), plain.grundy(p)) << format_position(p);
    }
    EXPECT_EQ(plain.memo_size(), 0U);
    EXPECT_GT(memo.memo_size(), 0U);
}

TEST(ImpartialSolver, DeepGamesDoNotRecurse)
{
    ImpartialSolver<TowerNimPosition> tower;
    EXPECT_EQ(tower.grundy(TowerNimPosition(std::vector<std::uint32_t>(3000, 1))), Nimber{0});
    EXPECT_EQ(tower.grundy(TowerNimPosition(std::vector<std::uint32_t>(3001, 1))), Nimber{1});
}

TEST(ImpartialSolver, MemoCapIsAnError)
{
    ImpartialSolver<NimPosition> nim(EngineConfig{10, true});
    EXPECT_THROW(nim.grundy(NimPosition({5, 6, 7})), ResourceLimitError);
}

TEST(ImpartialSolver, IndependentWorkersAgree)
{
    auto positions = verify::enumerate_tower(5, 4);
    std::vector<Nimber> reference;
    ImpartialSolver<TowerNimPosition> single;
    for (const auto& p : positions) {
        reference.push_back(single.grundy(p));
    }
    std::vector<std::vector<Nimber>> results(3, std::vector<Nimber>(positions.size()));
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
        workers.emplace_back([&, t] {
            ImpartialSolver<TowerNimPosition> solver;
            // Each worker walks the positions in a different order.
            for (std::size_t k = 0; k < positions.size(); ++k) {
                std::size_t i = t % 2 == 0 ? (k + t * 97) % positions.size() : positions.size() - 1 - k;
                results[t][i] = solver.grundy(positions[i]);
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (const auto& r : results) {
        EXPECT_EQ(r, reference);
    }
}

ColPosition col_path(std::initializer_list<Color> colors)
{
    return ColPosition::path(std::vector<Color>(colors));
}

TEST(PartizanSolver, OutcomeExamples)
{
    PartizanSolver<ColPosition> col;
    EXPECT_EQ(col.outcome(ColPosition{}), Outcome::P);
    EXPECT_EQ(col.outcome(col_path({Color::Uncolored})), Outcome::N);
    EXPECT_EQ(col.outcome(col_path({Color::Uncolored, Color::Blue})), Outcome::R);
}

TEST(PartizanSolver, ValueExamples)
{
    PartizanSolver<ColPosition> col;
    EXPECT_EQ(col.value(col_path({Color::Uncolored})), star());
    EXPECT_EQ(col.value(col_path({Color::Uncolored, Color::Uncolored})), zero());
    EXPECT_EQ(col.value(parse_col_tree("U(U,U)")), star());
}

TEST(PartizanSolver, ValueAgreesWithOutcomeSearch)
{
    PartizanSolver<ColPosition> col;
    for (const auto& p : verify::enumerate_col_paths(5)) {
        EXPECT_EQ(outcome_of_value(col.value(p)), col.outcome(p)) << format_col_path(p);
    }
    for (const auto& shape : verify::enumerate_tree_shapes(5)) {
        for (const auto& p : verify::enumerate_colorings(parse_col_tree(shape))) {
            EXPECT_EQ(outcome_of_value(col.value(p)), col.outcome(p)) << format_col_tree(p);
        }
    }
}

TEST(PartizanSolver, WinningMovesNonEmptyIffMoverWins)
{
    PartizanSolver<ColPosition> col;
    for (const auto& p : verify::enumerate_col_paths(4)) {
        for (Player who : {Player::Left, Player::Right}) {
            EXPECT_EQ(col.winning_moves(p, who).empty(), !col.wins_moving_first(p, who));
        }
    }
}

TEST(PartizanSolver, MemoizationIsTransparent)
{
    PartizanSolver<ColPosition> memo;
    PartizanSolver<ColPosition> plain(EngineConfig{EngineConfig::kDefaultMemoCap, false});
    for (const auto& p : verify::enumerate_col_paths(4)) {
        EXPECT_EQ(memo.value(p), plain.value(p));
        EXPECT_EQ(memo.outcome(p), plain.outcome(p));
    }
}

TEST(PartizanSolver, MemoCapIsAnError)
{
    PartizanSolver<ColPosition> col(EngineConfig{5, true});
    EXPECT_THROW(col.value(ColPosition::path(std::vector<Color>(6, Color::Uncolored))), ResourceLimitError);
}

} // namespace
} // namespace cgt
