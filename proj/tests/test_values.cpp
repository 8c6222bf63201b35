#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/game.hpp"
#include "cgt/value_text.hpp"

namespace cgt {
namespace {

Game num(std::int64_t n, unsigned e = 0)
{
    return number(Dyadic(n, e));
}

std::vector<Game> subset(const std::vector<Game>& pool, unsigned mask)
{
    std::vector<Game> out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (mask & (1U << i)) {
            out.push_back(pool[i]);
        }
    }
    return out;
}

// All games born by day 2, built by brute force from every pair of option
// subsets of the day-1 games.
std::vector<Game> born_by_day_two()
{
    std::vector<Game> day1;
    for (unsigned l = 0; l < 2; ++l) {
        for (unsigned r = 0; r < 2; ++r) {
            day1.push_back(make_game(subset({zero()}, l), subset({zero()}, r)));
        }
    }
    std::set<Game, GameIdLess> distinct;
    for (unsigned l = 0; l < 16; ++l) {
        for (unsigned r = 0; r < 16; ++r) {
            distinct.insert(make_game(subset(day1, l), subset(day1, r)));
        }
    }
    return {distinct.begin(), distinct.end()};
}

// Up to 200 games of birthday <= 4 from fixed-seed random option subsets.
std::vector<Game> sample_games()
{
    std::mt19937 rng(20240611);
    std::vector<Game> pool = born_by_day_two();
    std::vector<Game> out = pool;
    auto pick = [&](const std::vector<Game>& from) {
        std::vector<Game> opts;
        std::uniform_int_distribution<std::size_t> count(0, 3);
        std::uniform_int_distribution<std::size_t> index(0, from.size() - 1);
        for (std::size_t n = count(rng); n > 0; --n) {
            opts.push_back(from[index(rng)]);
        }
        return opts;
    };
    std::vector<Game> day3;
    for (int i = 0; i < 90; ++i) {
        day3.push_back(make_game(pick(pool), pick(pool)));
    }
    out.insert(out.end(), day3.begin(), day3.end());
    for (int i = 0; i < 88; ++i) {
        out.push_back(make_game(pick(day3), pick(day3)));
    }
    return out;
}

TEST(MakeGame, EmptyIsZero)
{
    EXPECT_EQ(make_game({}, {}), zero());
    EXPECT_TRUE(zero().left_options().empty());
    EXPECT_TRUE(zero().right_options().empty());
}

TEST(MakeGame, ZeroZeroIsStar)
{
    EXPECT_EQ(make_game({zero()}, {zero()}), star());
}

TEST(MakeGame, StarStarIsZero)
{
    EXPECT_EQ(make_game({star()}, {star()}), zero());
}

TEST(MakeGame, DeletesDominatedOptions)
{
    EXPECT_EQ(make_game({zero(), num(1)}, {}), num(2));
    EXPECT_EQ(make_game({num(-1), star()}, {star(), num(1)}), zero());
}

TEST(MakeGame, BypassesReversibleOptions)
{
    // In {*|} Left's move to * reverses through 0, whose left options are
    // empty: the game is 0.
    EXPECT_EQ(make_game({star()}, {}), zero());
    // {0,*|0} is up-star and already canonical.
    Game g = make_game({zero(), star()}, {zero()});
    EXPECT_FALSE(g.is_number());
    EXPECT_EQ(g.left_options().size(), 2U);
}

TEST(Add, Examples)
{
    EXPECT_EQ(star() + star(), zero());
    EXPECT_EQ(num(1, 1) + num(1, 1), num(1));
    EXPECT_EQ(num(-1) + star(), make_game({num(-1)}, {num(-1)}));
}

TEST(Negate, Examples)
{
    EXPECT_EQ(-zero(), zero());
    EXPECT_EQ(-star(), star());
    Game sw = make_game({num(1)}, {num(-1)});
    EXPECT_EQ(-sw, sw);
}

TEST(Leq, Examples)
{
    EXPECT_FALSE(leq(zero(), star()));
    EXPECT_FALSE(leq(star(), zero()));
    EXPECT_TRUE(leq(num(-1) + star(), zero()));
    EXPECT_TRUE(leq(zero(), num(1)));
}

TEST(OutcomeOfValue, Examples)
{
    EXPECT_EQ(outcome_of_value(zero()), Outcome::P);
    EXPECT_EQ(outcome_of_value(star()), Outcome::N);
    EXPECT_EQ(outcome_of_value(num(-1) + star()), Outcome::R);
    EXPECT_EQ(outcome_of_value(num(3, 2)), Outcome::L);
}

TEST(Number, CanonicalForms)
{
    EXPECT_EQ(num(0), zero());
    Game two = num(2);
    ASSERT_EQ(two.left_options().size(), 1U);
    EXPECT_EQ(two.left_options()[0], num(1));
    EXPECT_TRUE(two.right_options().empty());
    Game one = num(1);
    ASSERT_EQ(one.left_options().size(), 1U);
    EXPECT_EQ(one.left_options()[0], zero());
    Game half = num(1, 1);
    ASSERT_EQ(half.left_options().size(), 1U);
    ASSERT_EQ(half.right_options().size(), 1U);
    EXPECT_EQ(half.left_options()[0], zero());
    EXPECT_EQ(half.right_options()[0], num(1));
    EXPECT_EQ(half.number(), Dyadic(1, 1));
}

TEST(Number, MatchesDyadicArithmetic)
{
    // Dyadic arithmetic is independent of the game store, so it serves as
    // the oracle for sums and order of numbers.
    for (std::int64_t a = -12; a <= 12; ++a) {
        for (std::int64_t b = -12; b <= 12; ++b) {
            Dyadic x(a, 2);
            Dyadic y(b, 3);
            EXPECT_EQ(number(x) + number(y), number(x + y));
            EXPECT_EQ(leq(number(x), number(y)), x <= y);
        }
    }
}

TEST(Number, OverflowIsAnError)
{
    EXPECT_THROW(num(std::int64_t{1} << 40), OverflowError);
    EXPECT_THROW(Dyadic(1, 63), OverflowError);
}

TEST(Nimber, Examples)
{
    EXPECT_EQ(nimber_value(0), zero());
    EXPECT_EQ(nimber_value(1), make_game({zero()}, {zero()}));
    EXPECT_EQ(nimber_value(2), make_game({zero(), star()}, {zero(), star()}));
    EXPECT_EQ(nimber_value(5).nimber(), 5U);
    EXPECT_EQ(nimber_value(3) + nimber_value(5), nimber_value(6));
    EXPECT_THROW(nimber_value(1025), BoundError);
}

TEST(StarMultiple, Examples)
{
    EXPECT_EQ(star_multiple(2, Dyadic{}), zero());
    EXPECT_EQ(star_multiple(3, Dyadic{}), star());
    EXPECT_EQ(star_multiple(1, Dyadic(-1)), make_game({num(-1)}, {num(-1)}));
}

TEST(StarLemma, HoldsOnEighths)
{
    for (std::int64_t k = -32; k <= 32; ++k) {
        Dyadic x(k, 3);
        Game gx = number(x);
        EXPECT_EQ(gx + star(), make_game({gx}, {gx})) << x.to_string();
        EXPECT_EQ(gx, make_game({gx + star()}, {gx + star()})) << x.to_string();
    }
}

TEST(Birthday, SmallGames)
{
    EXPECT_EQ(zero().birthday(), 0U);
    EXPECT_EQ(star().birthday(), 1U);
    EXPECT_EQ(num(1, 1).birthday(), 2U);
    EXPECT_EQ(nimber_value(2).birthday(), 2U);
    EXPECT_EQ(num(3).birthday(), 3U);
}

TEST(Canonical, TwentyTwoGamesBornByDayTwo)
{
    auto games = born_by_day_two();
    EXPECT_EQ(games.size(), 22U);
    for (Game g : games) {
        EXPECT_LE(g.birthday(), 2U);
    }
}

TEST(Properties, IdempotentCanonicalization)
{
    for (Game g : sample_games()) {
        EXPECT_EQ(make_game(g.left_options(), g.right_options()), g) << format_value(g);
    }
}

TEST(Properties, AdditiveInverse)
{
    for (Game g : sample_games()) {
        EXPECT_EQ(g + (-g), zero()) << format_value(g);
        EXPECT_EQ(-(-g), g);
    }
}

TEST(Properties, AddCommutesAndAssociates)
{
    auto games = sample_games();
    ASSERT_LE(games.size(), 200U);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> index(0, games.size() - 1);
    for (int i = 0; i < 300; ++i) {
        Game a = games[index(rng)];
        Game b = games[index(rng)];
        Game c = games[index(rng)];
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + zero(), a);
    }
}

TEST(Properties, LeqIsAPartialOrder)
{
    auto games = sample_games();
    games.resize(std::min<std::size_t>(games.size(), 70));
    for (Game g : games) {
        EXPECT_TRUE(leq(g, g));
    }
    for (Game g : games) {
        for (Game h : games) {
            bool gh = leq(g, h);
            EXPECT_EQ(gh && leq(h, g), g == h);
            EXPECT_EQ(gh, leq(-h, -g));
            // g <= h exactly when h - g is zero or positive.
            Outcome o = outcome_of_value(h - g);
            EXPECT_EQ(gh, o == Outcome::P || o == Outcome::L);
            if (!gh) {
                continue;
            }
            for (Game k : games) {
                if (leq(h, k)) {
                    EXPECT_TRUE(leq(g, k));
                }
            }
        }
    }
}

TEST(Properties, ConcurrentConstructionIsDeterministic)
{
    auto games = sample_games();
    std::vector<std::vector<Game>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = 0; i + 1 < games.size(); ++i) {
                results[t].push_back(games[i] + games[i + 1] + nimber_value(static_cast<std::uint32_t>(i % 7)));
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (std::size_t t = 1; t < results.size(); ++t) {
        EXPECT_EQ(results[t], results[0]);
    }
}

} // namespace
} // namespace cgt
