#include "cgt/game.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

constexpr std::int64_t kMaxMaterializedInteger = std::int64_t{1} << 20;
constexpr std::uint32_t kMaxNimber = 1024;

struct Node {
    std::vector<Game> left;
    std::vector<Game> right;
    std::optional<Dyadic> number;
    std::optional<std::uint32_t> nimber;
    std::optional<Dyadic> number_plus_star;
    std::uint32_t birthday = 0;
};

std::uint64_t pair_key(Game a, Game b) noexcept
{
    return (static_cast<std::uint64_t>(a.id()) << 32) | b.id();
}

void sort_unique(std::vector<Game>& v)
{
    std::sort(v.begin(), v.end(), GameIdLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

/// Owns every canonical form. All public entry points take the store's
/// recursive lock; nodes live in a deque so references handed out stay valid.
class GameStore {
public:
    static GameStore& instance()
    {
        static GameStore store;
        return store;
    }

    const Node& node(Game g)
    {
        std::lock_guard lock(mu_);
        return nodes_[g.id()];
    }

    std::size_t size()
    {
        std::lock_guard lock(mu_);
        return nodes_.size();
    }

    std::vector<Game> snapshot()
    {
        std::lock_guard lock(mu_);
        std::vector<Game> out;
        out.reserve(nodes_.size());
        for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
            out.push_back(Game{i});
        }
        return out;
    }

    Game make(std::vector<Game> left, std::vector<Game> right)
    {
        std::lock_guard lock(mu_);
        sort_unique(left);
        sort_unique(right);
        canonicalize(left, right);
        return intern(std::move(left), std::move(right));
    }

    bool leq(Game g, Game h)
    {
        std::lock_guard lock(mu_);
        return leq_locked(g, h);
    }

    Game add(Game g, Game h)
    {
        std::lock_guard lock(mu_);
        return add_locked(g, h);
    }

    Game negate(Game g)
    {
        std::lock_guard lock(mu_);
        return negate_locked(g);
    }

    Game number(const Dyadic& d)
    {
        std::lock_guard lock(mu_);
        return number_locked(d);
    }

    Game nimber(std::uint32_t k)
    {
        if (k > kMaxNimber) {
            throw BoundError("nimber *" + std::to_string(k) + " exceeds the table bound *" + std::to_string(kMaxNimber));
        }
        std::lock_guard lock(mu_);
        while (nimbers_.size() <= k) {
            // The form {*0..*(j-1) | *0..*(j-1)} is already canonical.
            nimbers_.push_back(intern(nimbers_, nimbers_));
        }
        return nimbers_[k];
    }

private:
    GameStore()
    {
        intern({}, {});
        nimbers_.push_back(Game{0});
    }

    Game intern(std::vector<Game> left, std::vector<Game> right)
    {
        sort_unique(left);
        sort_unique(right);
        std::string key;
        key.reserve(4 * (left.size() + right.size() + 1));
        auto put = [&key](std::uint32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
        put(static_cast<std::uint32_t>(left.size()));
        for (Game g : left) {
            put(g.id());
        }
        for (Game g : right) {
            put(g.id());
        }
        if (auto it = index_.find(key); it != index_.end()) {
            return Game{it->second};
        }

        Node n;
        n.left = std::move(left);
        n.right = std::move(right);
        classify(n);
        auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(std::move(n));
        index_.emplace(std::move(key), id);
        return Game{id};
    }

    // Recognizes the canonical shapes of numbers, nimbers and x + *.
    void classify(Node& n) const
    {
        std::uint32_t day = 0;
        for (const auto* side : {&n.left, &n.right}) {
            for (Game g : *side) {
                day = std::max(day, nodes_[g.id()].birthday + 1);
            }
        }
        n.birthday = day;

        auto num = [this](Game g) { return nodes_[g.id()].number; };
        if (n.left.empty() && n.right.empty()) {
            n.number = Dyadic{};
            n.nimber = 0;
            return;
        }
        if (n.left.size() == 1 && n.right.empty()) {
            if (auto x = num(n.left[0]); x && x->is_integer() && x->numerator() >= 0) {
                n.number = *x + Dyadic{1};
            }
            return;
        }
        if (n.left.empty() && n.right.size() == 1) {
            if (auto y = num(n.right[0]); y && y->is_integer() && y->numerator() <= 0) {
                n.number = *y - Dyadic{1};
            }
            return;
        }
        if (n.left.size() == 1 && n.right.size() == 1) {
            auto x = num(n.left[0]);
            auto y = num(n.right[0]);
            if (x && y && *x < *y) {
                Dyadic mid = (*x + *y).half();
                Dyadic gap = *y - *x;
                if (mid.exponent() >= 1 && gap.numerator() == 1 && gap.exponent() + 1 == mid.exponent()) {
                    n.number = mid;
                    return;
                }
            }
            if (x && n.left[0] == n.right[0]) {
                n.number_plus_star = *x;
            }
        }
        if (n.left == n.right) {
            std::vector<bool> seen(n.left.size(), false);
            for (Game g : n.left) {
                auto k = nodes_[g.id()].nimber;
                if (!k || *k >= seen.size() || seen[*k]) {
                    return;
                }
                seen[*k] = true;
            }
            n.nimber = static_cast<std::uint32_t>(n.left.size());
        }
    }

    void canonicalize(std::vector<Game>& left, std::vector<Game>& right)
    {
        for (;;) {
            remove_dominated(left, /*keep_larger=*/true);
            remove_dominated(right, /*keep_larger=*/false);
            if (bypass_left(left, right) || bypass_right(left, right)) {
                sort_unique(left);
                sort_unique(right);
                continue;
            }
            return;
        }
    }

    // Distinct canonical handles are distinct values, so g <= g' with g != g'
    // means g is strictly worse for the side owning it.
    void remove_dominated(std::vector<Game>& opts, bool keep_larger)
    {
        if (opts.size() < 2) {
            return;
        }
        std::vector<Game> kept;
        kept.reserve(opts.size());
        for (std::size_t i = 0; i < opts.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < opts.size() && !dominated; ++j) {
                if (i != j) {
                    dominated = keep_larger ? leq_locked(opts[i], opts[j]) : leq_locked(opts[j], opts[i]);
                }
            }
            if (!dominated) {
                kept.push_back(opts[i]);
            }
        }
        opts = std::move(kept);
    }

    // A left option g is reversible through gR when gR <= G; it is replaced
    // by the left options of gR. Returns true after one replacement.
    bool bypass_left(std::vector<Game>& left, std::vector<Game>& right)
    {
        for (std::size_t i = 0; i < left.size(); ++i) {
            for (Game gr : nodes_[left[i].id()].right) {
                if (leq_to_form(gr, left, right)) {
                    const auto& repl = nodes_[gr.id()].left;
                    left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
                    left.insert(left.end(), repl.begin(), repl.end());
                    return true;
                }
            }
        }
        return false;
    }

    bool bypass_right(std::vector<Game>& left, std::vector<Game>& right)
    {
        for (std::size_t i = 0; i < right.size(); ++i) {
            for (Game hl : nodes_[right[i].id()].left) {
                if (form_leq(left, right, hl)) {
                    const auto& repl = nodes_[hl.id()].right;
                    right.erase(right.begin() + static_cast<std::ptrdiff_t>(i));
                    right.insert(right.end(), repl.begin(), repl.end());
                    return true;
                }
            }
        }
        return false;
    }

    // x <= {left | right}, where the form on the right need not be canonical.
    bool leq_to_form(Game x, const std::vector<Game>& left, const std::vector<Game>& right)
    {
        for (Game gr : right) {
            if (leq_locked(gr, x)) {
                return false;
            }
        }
        for (Game xl : nodes_[x.id()].left) {
            if (form_leq(left, right, xl)) {
                return false;
            }
        }
        return true;
    }

    // {left | right} <= x.
    bool form_leq(const std::vector<Game>& left, const std::vector<Game>& right, Game x)
    {
        for (Game gl : left) {
            if (leq_locked(x, gl)) {
                return false;
            }
        }
        for (Game xr : nodes_[x.id()].right) {
            if (leq_to_form(xr, left, right)) {
                return false;
            }
        }
        return true;
    }

    bool leq_locked(Game g, Game h)
    {
        if (g == h) {
            return true;
        }
        const Node& gn = nodes_[g.id()];
        const Node& hn = nodes_[h.id()];
        if (gn.number && hn.number) {
            return *gn.number <= *hn.number;
        }
        std::uint64_t key = pair_key(g, h);
        if (auto it = leq_cache_.find(key); it != leq_cache_.end()) {
            return it->second;
        }
        bool result = true;
        for (Game gl : gn.left) {
            if (leq_locked(h, gl)) {
                result = false;
                break;
            }
        }
        if (result) {
            for (Game hr : hn.right) {
                if (leq_locked(hr, g)) {
                    result = false;
                    break;
                }
            }
        }
        leq_cache_.emplace(key, result);
        return result;
    }

    Game add_locked(Game g, Game h)
    {
        if (g == Game{}) {
            return h;
        }
        if (h == Game{}) {
            return g;
        }
        if (h.id() < g.id()) {
            std::swap(g, h);
        }
        std::uint64_t key = pair_key(g, h);
        if (auto it = add_cache_.find(key); it != add_cache_.end()) {
            return Game{it->second};
        }
        // Deque growth during the recursion never moves existing nodes.
        const std::vector<Game>& gl = nodes_[g.id()].left;
        const std::vector<Game>& gr = nodes_[g.id()].right;
        const std::vector<Game>& hl = nodes_[h.id()].left;
        const std::vector<Game>& hr = nodes_[h.id()].right;
        const auto& gnum = nodes_[g.id()].number;
        const auto& hnum = nodes_[h.id()].number;

        Game result;
        if (gnum && hnum) {
            result = number_locked(*gnum + *hnum);
        } else {
            std::vector<Game> left;
            std::vector<Game> right;
            left.reserve(gl.size() + hl.size());
            right.reserve(gr.size() + hr.size());
            for (Game x : gl) {
                left.push_back(add_locked(x, h));
            }
            for (Game x : hl) {
                left.push_back(add_locked(g, x));
            }
            for (Game x : gr) {
                right.push_back(add_locked(x, h));
            }
            for (Game x : hr) {
                right.push_back(add_locked(g, x));
            }
            sort_unique(left);
            sort_unique(right);
            canonicalize(left, right);
            result = intern(std::move(left), std::move(right));
        }
        add_cache_.emplace(key, result.id());
        return result;
    }

    Game negate_locked(Game g)
    {
        if (g == Game{}) {
            return g;
        }
        if (auto it = neg_cache_.find(g.id()); it != neg_cache_.end()) {
            return Game{it->second};
        }
        const Node& n = nodes_[g.id()];
        Game result;
        if (n.number) {
            result = number_locked(-*n.number);
        } else {
            std::vector<Game> left;
            std::vector<Game> right;
            for (Game x : n.right) {
                left.push_back(negate_locked(x));
            }
            for (Game x : n.left) {
                right.push_back(negate_locked(x));
            }
            sort_unique(left);
            sort_unique(right);
            // Negation preserves canonicity.
            result = intern(std::move(left), std::move(right));
        }
        neg_cache_.emplace(g.id(), result.id());
        neg_cache_.emplace(result.id(), g.id());
        return result;
    }

    Game number_locked(const Dyadic& d)
    {
        if (d.floor() > kMaxMaterializedInteger || d.floor() < -kMaxMaterializedInteger) {
            throw OverflowError("number " + d.to_string() + " is too large to materialize");
        }
        auto key = std::make_pair(d.numerator(), d.exponent());
        if (auto it = numbers_.find(key); it != numbers_.end()) {
            return Game{it->second};
        }
        Game result;
        if (d.numerator() == 0) {
            result = Game{};
        } else if (d.is_integer()) {
            // Build the chain 1, 2, ..., n (or -1, ..., n) iteratively.
            std::int64_t n = d.numerator();
            std::int64_t dir = n > 0 ? 1 : -1;
            Game prev;
            for (std::int64_t v = dir; ; v += dir) {
                Game cur;
                if (auto it = numbers_.find({v, 0u}); it != numbers_.end()) {
                    cur = Game{it->second};
                } else {
                    cur = v > 0 ? intern({prev}, {}) : intern({}, {prev});
                    numbers_.emplace(std::make_pair(v, 0u), cur.id());
                }
                if (v == n) {
                    result = cur;
                    break;
                }
                prev = cur;
            }
        } else {
            Dyadic step(1, d.exponent());
            Game lo = number_locked(d - step);
            Game hi = number_locked(d + step);
            result = intern({lo}, {hi});
        }
        numbers_.emplace(key, result.id());
        return result;
    }

    std::recursive_mutex mu_;
    std::deque<Node> nodes_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::unordered_map<std::uint64_t, bool> leq_cache_;
    std::unordered_map<std::uint64_t, std::uint32_t> add_cache_;
    std::unordered_map<std::uint32_t, std::uint32_t> neg_cache_;
    std::map<std::pair<std::int64_t, unsigned>, std::uint32_t> numbers_;
    std::vector<Game> nimbers_;
};

std::span<const Game> Game::left_options() const
{
    return GameStore::instance().node(*this).left;
}

std::span<const Game> Game::right_options() const
{
    return GameStore::instance().node(*this).right;
}

std::optional<Dyadic> Game::number() const
{
    return GameStore::instance().node(*this).number;
}

std::optional<std::uint32_t> Game::nimber() const
{
    return GameStore::instance().node(*this).nimber;
}

std::optional<Dyadic> Game::number_plus_star() const
{
    return GameStore::instance().node(*this).number_plus_star;
}

std::uint32_t Game::birthday() const
{
    return GameStore::instance().node(*this).birthday;
}

Game make_game(std::span<const Game> left, std::span<const Game> right)
{
    return GameStore::instance().make({left.begin(), left.end()}, {right.begin(), right.end()});
}

Game make_game(std::initializer_list<Game> left, std::initializer_list<Game> right)
{
    return GameStore::instance().make(std::vector<Game>(left), std::vector<Game>(right));
}

Game add(Game g, Game h)
{
    return GameStore::instance().add(g, h);
}

Game negate(Game g)
{
    return GameStore::instance().negate(g);
}

bool leq(Game g, Game h)
{
    return GameStore::instance().leq(g, h);
}

Outcome outcome_of_value(Game g)
{
    bool ge_zero = leq(Game{}, g);
    bool le_zero = leq(g, Game{});
    if (ge_zero && le_zero) {
        return Outcome::P;
    }
    if (ge_zero) {
        return Outcome::L;
    }
    if (le_zero) {
        return Outcome::R;
    }
    return Outcome::N;
}

Game number(const Dyadic& d)
{
    return GameStore::instance().number(d);
}

Game nimber_value(std::uint32_t k)
{
    return GameStore::instance().nimber(k);
}

Game star()
{
    return nimber_value(1);
}

Game star_multiple(std::uint64_t n, const Dyadic& offset)
{
    Game base = number(offset);
    return n % 2 == 0 ? base : add(base, star());
}

std::vector<Game> all_games()
{
    return GameStore::instance().snapshot();
}

std::size_t game_store_size()
{
    return GameStore::instance().size();
}

} // namespace cgt
