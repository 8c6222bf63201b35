#include "cgt/verify/checks.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cgt/errors.hpp"
#include "cgt/position_text.hpp"
#include "cgt/value_text.hpp"

namespace cgt::verify {
namespace {

// Informational checks can disagree on a large share of their range; they
// list only the first few disagreements and report the total in details.
constexpr std::size_t kInformationalListed = 50;

std::string outcome_text(Outcome o)
{
    return std::string(to_string(o));
}

std::string grundy_text(Nimber n)
{
    return "grundy " + std::to_string(n.value);
}

VerificationReport make_report(std::string check, const Bounds& b)
{
    b.validate();
    VerificationReport r;
    r.check = std::move(check);
    r.bounds = b;
    return r;
}

void settle(VerificationReport& r)
{
    r.status = r.mismatches.empty() ? Status::Pass : Status::Fail;
}

// Restricts `b` to the fields a check reads, so reports echo only what was used.
Bounds pick(const Bounds& b, std::initializer_list<std::optional<std::uint32_t> Bounds::*> fields)
{
    Bounds out;
    for (auto f : fields) {
        out.*f = b.*f;
    }
    return out;
}

void add_capped(VerificationReport& r, std::uint64_t& total, Mismatch m)
{
    ++total;
    if (r.mismatches.size() < kInformationalListed) {
        r.mismatches.push_back(std::move(m));
    }
}

bool is_simple_value(Game g)
{
    return g.number() || g.nimber() || g.number_plus_star();
}

// "integer" / "integer+*" values are what paths realize; anything else is
// classified for the tree sweep.
std::optional<std::string> non_integer_kind(Game g)
{
    if (auto x = g.number()) {
        return x->is_integer() ? std::nullopt : std::optional<std::string>("number");
    }
    if (auto x = g.number_plus_star()) {
        return x->is_integer() ? std::nullopt : std::optional<std::string>("number+*");
    }
    if (g.nimber()) {
        return "nimber";
    }
    return "other";
}

std::string col_text(const ColPosition& p)
{
    return format_col_any(p);
}

} // namespace

VerificationReport verify_nim(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_heaps, &Bounds::max_heap_size});
    auto r = make_report("nim", b);
    ImpartialSolver<NimPosition> solver(opt.engine);
    for (const NimPosition& p : enumerate_nim_tuples(b.require(&Bounds::max_heaps, "max_heaps"),
                                                     b.require(&Bounds::max_heap_size, "max_heap_size"))) {
        Nimber closed = nim_grundy_closed(p);
        Nimber oracle = solver.grundy(p);
        ++r.positions_checked;
        if (closed != oracle) {
            r.mismatches.push_back({format_position(p), grundy_text(closed), grundy_text(oracle)});
        }
    }
    settle(r);
    return r;
}

VerificationReport verify_antonim(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_heaps, &Bounds::max_heap_size});
    auto r = make_report("antonim", b);
    ImpartialSolver<AntonimPosition> solver(opt.engine);
    std::uint64_t skipped = 0;
    for (const AntonimPosition& p : enumerate_antonim(b.require(&Bounds::max_heaps, "max_heaps"),
                                                      b.require(&Bounds::max_heap_size, "max_heap_size"))) {
        if (p.heaps().size() > 3) {
            ++skipped;
            continue;
        }
        Outcome closed = antonim_outcome_closed(p);
        Outcome oracle = solver.outcome(p);
        ++r.positions_checked;
        if (closed != oracle) {
            r.mismatches.push_back({format_position(p), outcome_text(closed), outcome_text(oracle)});
        }
    }
    if (skipped > 0) {
        r.details = {{"skipped_without_closed_form", skipped}};
    }
    settle(r);
    return r;
}

VerificationReport verify_tower(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_length, &Bounds::max_heap_size});
    auto r = make_report("tower", b);
    ImpartialSolver<TowerNimPosition> solver(opt.engine);
    std::uint64_t nimbers_compared = 0;
    std::uint64_t ones_on_top = 0;
    for (const TowerNimPosition& p : enumerate_tower(b.require(&Bounds::max_length, "max_length"),
                                                     b.require(&Bounds::max_heap_size, "max_heap_size"))) {
        Nimber oracle = solver.grundy(p);
        Outcome oracle_outcome = oracle.value == 0 ? Outcome::P : Outcome::N;
        ++r.positions_checked;
        Outcome closed = tower_outcome_closed(p);
        if (closed != oracle_outcome) {
            r.mismatches.push_back({format_position(p), outcome_text(closed), outcome_text(oracle_outcome)});
        }
        if (auto n = tower_nimber_closed(p)) {
            ++nimbers_compared;
            if (tower_ones_on_top(p)) {
                ++ones_on_top;
            }
            if (*n != oracle) {
                r.mismatches.push_back({format_position(p), grundy_text(*n), grundy_text(oracle)});
            }
        }
    }
    r.details = {{"nimbers_compared", nimbers_compared}, {"ones_on_top_family", ones_on_top}};
    settle(r);
    return r;
}

VerificationReport verify_rotisserie(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_length, &Bounds::max_heap_size, &Bounds::all_two_length,
                         &Bounds::all_two_heap_size});
    auto r = make_report("rotisserie", b);
    ImpartialSolver<RotisseriePosition> solver(opt.engine);
    const char* reading = opt.adjnim_indexing == AdjNimIndexing::OneBased ? "one-based" : "zero-based";

    auto check = [&](const RotisseriePosition& p) {
        Outcome oracle = solver.outcome(p);
        ++r.positions_checked;
        std::string disagreeing;
        auto compare = [&](std::optional<Outcome> closed, const std::string& rule) {
            if (closed && *closed != oracle) {
                if (!disagreeing.empty()) {
                    disagreeing += "; ";
                }
                disagreeing += outcome_text(*closed) + " by " + rule;
            }
        };
        compare(rotisserie_two_heap_rule(p), "two-heap rule");
        compare(rotisserie_three_heap_rule(p), "three-heap rule");
        compare(rotisserie_min_index_rule(p, opt.adjnim_indexing), std::string("min-index rule (") + reading + ")");
        compare(rotisserie_outcome_closed(p, opt.adjnim_indexing), "classifier");
        if (!disagreeing.empty()) {
            r.mismatches.push_back({format_position(p), disagreeing, outcome_text(oracle)});
        }
    };

    const std::uint32_t max_length = b.require(&Bounds::max_length, "max_length");
    const std::uint32_t max_heap = b.require(&Bounds::max_heap_size, "max_heap_size");
    for (const RotisseriePosition& p : enumerate_rotisserie(max_length, max_heap)) {
        check(p);
    }
    // Longer queues of heaps >= 2 only, not already covered above.
    if (b.all_two_length && b.all_two_heap_size) {
        for (const RotisseriePosition& p : enumerate_rotisserie(*b.all_two_length, *b.all_two_heap_size, 2, 1)) {
            const auto& q = p.queue();
            bool covered = q.size() <= max_length && std::all_of(q.begin(), q.end(), [&](auto a) { return a <= max_heap; });
            if (!covered) {
                check(p);
            }
        }
    }
    settle(r);
    return r;
}

VerificationReport verify_greedy(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_heaps, &Bounds::max_heap_size});
    auto r = make_report("greedy", b);
    ImpartialSolver<GreedyNimPosition> solver(opt.engine);
    for (const GreedyNimPosition& p : enumerate_greedy(b.require(&Bounds::max_heaps, "max_heaps"),
                                                       b.require(&Bounds::max_heap_size, "max_heap_size"))) {
        Outcome closed = greedy_outcome_closed(p);
        Outcome oracle = solver.outcome(p);
        ++r.positions_checked;
        if (closed != oracle) {
            r.mismatches.push_back({format_position(p), outcome_text(closed), outcome_text(oracle)});
        }
    }
    settle(r);
    return r;
}

VerificationReport verify_col_paths(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_vertices});
    auto r = make_report("col-paths", b);
    PartizanSolver<ColPosition> solver(opt.engine);
    std::uint64_t single_path_checked = 0;
    for (const ColPosition& p : enumerate_col_paths(b.require(&Bounds::max_vertices, "max_vertices"))) {
        Game oracle = solver.value(p);
        ++r.positions_checked;
        Game closed = col_decompose_paths(p).value;
        if (closed != oracle) {
            r.mismatches.push_back({format_col_path(p), format_value(closed), format_value(oracle)});
        }
        // U^n optionally followed by one colored vertex: the single-path formula.
        const auto& c = p.colors();
        std::size_t n = c.size();
        std::size_t uncolored = static_cast<std::size_t>(std::count(c.begin(), c.end(), Color::Uncolored));
        std::optional<PathEnd> end;
        if (uncolored == n) {
            end = PathEnd::None;
        } else if (uncolored + 1 == n && c.back() != Color::Uncolored) {
            end = c.back() == Color::Blue ? PathEnd::Blue : PathEnd::Red;
        }
        if (end) {
            ++single_path_checked;
            Game formula = col_path_value(static_cast<std::uint32_t>(uncolored), *end);
            if (formula != oracle) {
                r.mismatches.push_back({format_col_path(p), format_value(formula), format_value(oracle)});
            }
        }
    }
    r.details = {{"single_path_formula_checked", single_path_checked}};
    settle(r);
    return r;
}

VerificationReport verify_closed_forms(Ruleset ruleset, const Bounds& b, const VerifyOptions& opt)
{
    switch (ruleset) {
    case Ruleset::Nim:
        return verify_nim(b, opt);
    case Ruleset::Antonim:
        return verify_antonim(b, opt);
    case Ruleset::Tower:
        return verify_tower(b, opt);
    case Ruleset::Rotisserie:
        return verify_rotisserie(b, opt);
    case Ruleset::Greedy:
        return verify_greedy(b, opt);
    case Ruleset::ColPath:
        return verify_col_paths(b, opt);
    case Ruleset::ColTree:
        break;
    }
    throw std::invalid_argument("no closed form to verify for Col trees; use the tree-conjecture check");
}

namespace {

// The position the queue strategy lemma prescribes from L, or nullopt when
// the prescribed move is illegal (even heap count with a_0 = 1).
std::optional<RotisseriePosition> adj_strategy_target(const RotisseriePosition& l)
{
    const auto& q = l.queue();
    std::vector<std::uint32_t> next(q.begin() + 1, q.end());
    if (q.size() % 2 == 1) {
        next.push_back(1);
    } else {
        if (q.front() < 2) {
            return std::nullopt;
        }
        next.push_back(q.front() - 1);
    }
    return RotisseriePosition(std::move(next));
}

VerificationReport adj_strategy(const Bounds& in, const VerifyOptions& opt, bool require_tail_in_n)
{
    Bounds b = pick(in, {&Bounds::max_length, &Bounds::max_heap_size});
    auto r = make_report(require_tail_in_n ? "adj-strategy" : "adj-strategy-unscoped", b);
    ImpartialSolver<RotisseriePosition> solver(opt.engine);
    std::uint64_t total = 0;
    std::uint64_t vacuous = 0;
    for (const RotisseriePosition& l : enumerate_rotisserie(b.require(&Bounds::max_length, "max_length"),
                                                            b.require(&Bounds::max_heap_size, "max_heap_size"), 1, 1)) {
        if (solver.outcome(l) != Outcome::N) {
            ++vacuous;
            continue;
        }
        const auto& q = l.queue();
        if (require_tail_in_n) {
            RotisseriePosition tail(std::vector<std::uint32_t>(q.begin() + 1, q.end()));
            if (solver.outcome(tail) != Outcome::N) {
                ++vacuous;
                continue;
            }
        }
        auto target = adj_strategy_target(l);
        if (!target) {
            ++vacuous;
            continue;
        }
        ++r.positions_checked;
        Outcome got = solver.outcome(*target);
        if (got != Outcome::P) {
            Mismatch m{format_position(*target), "P", outcome_text(got)};
            if (require_tail_in_n) {
                ++total;
                r.mismatches.push_back(std::move(m));
            } else {
                add_capped(r, total, std::move(m));
            }
        }
    }
    r.details = nlohmann::ordered_json::object();
    r.details["hypotheses_not_met"] = vacuous;
    if (require_tail_in_n) {
        settle(r);
    } else {
        r.details["total_mismatches"] = total;
        r.status = Status::Informational;
    }
    return r;
}

} // namespace

VerificationReport check_adj_strategy(const Bounds& b, const VerifyOptions& opt)
{
    return adj_strategy(b, opt, true);
}

VerificationReport check_adj_strategy_unscoped(const Bounds& b, const VerifyOptions& opt)
{
    return adj_strategy(b, opt, false);
}

VerificationReport check_adj_compare(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_length, &Bounds::max_heap_size});
    auto r = make_report("adj-compare", b);
    const std::uint32_t max_heap = b.require(&Bounds::max_heap_size, "max_heap_size");
    ImpartialSolver<RotisseriePosition> solver(opt.engine);
    std::uint64_t p_positions = 0;
    for (const RotisseriePosition& l : enumerate_rotisserie(b.require(&Bounds::max_length, "max_length"), max_heap)) {
        if (solver.outcome(l) != Outcome::P) {
            continue;
        }
        ++p_positions;
        const auto& q = l.queue();
        // Odometer over per-index ranges: even indices 1..a_i, odd indices a_i..max.
        std::vector<std::uint32_t> lo(q.size());
        std::vector<std::uint32_t> hi(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            lo[i] = i % 2 == 0 ? 1 : q[i];
            hi[i] = i % 2 == 0 ? q[i] : std::max(q[i], max_heap);
        }
        std::vector<std::uint32_t> cur = lo;
        while (true) {
            RotisseriePosition t(cur);
            ++r.positions_checked;
            Outcome got = solver.outcome(t);
            if (got != Outcome::P) {
                r.mismatches.push_back({format_position(t), "P (from " + format_position(l) + ")", outcome_text(got)});
            }
            std::size_t i = cur.size();
            while (i > 0 && cur[i - 1] == hi[i - 1]) {
                cur[i - 1] = lo[i - 1];
                --i;
            }
            if (i == 0) {
                break;
            }
            ++cur[i - 1];
        }
    }
    r.details = {{"p_positions", p_positions}};
    settle(r);
    return r;
}

VerificationReport check_adjnim_indexing(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_length, &Bounds::max_heap_size});
    auto r = make_report("adjnim-indexing", b);
    ImpartialSolver<RotisseriePosition> solver(opt.engine);
    std::uint64_t one_based = 0;
    std::uint64_t zero_based = 0;
    std::uint64_t listed_total = 0;
    for (const RotisseriePosition& p : enumerate_rotisserie(b.require(&Bounds::max_length, "max_length"),
                                                            b.require(&Bounds::max_heap_size, "max_heap_size"), 2, 1)) {
        Outcome oracle = solver.outcome(p);
        ++r.positions_checked;
        for (auto reading : {AdjNimIndexing::OneBased, AdjNimIndexing::ZeroBased}) {
            auto closed = rotisserie_min_index_rule(p, reading);
            if (closed && *closed != oracle) {
                bool one = reading == AdjNimIndexing::OneBased;
                ++(one ? one_based : zero_based);
                add_capped(r, listed_total,
                           {format_position(p), outcome_text(*closed) + (one ? " (one-based)" : " (zero-based)"),
                            outcome_text(oracle)});
            }
        }
    }
    std::string consistent = one_based == 0 && zero_based == 0 ? "both"
                             : one_based == 0                  ? "one-based"
                             : zero_based == 0                 ? "zero-based"
                                                               : "neither";
    r.details = {{"one_based_mismatches", one_based},
                 {"zero_based_mismatches", zero_based},
                 {"consistent_reading", consistent}};
    r.status = Status::Informational;
    return r;
}

VerificationReport check_tower_parity_literal(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_length, &Bounds::max_heap_size});
    auto r = make_report("tower-parity-literal", b);
    ImpartialSolver<TowerNimPosition> solver(opt.engine);
    std::uint64_t total = 0;
    for (const TowerNimPosition& p : enumerate_tower(b.require(&Bounds::max_length, "max_length"),
                                                     b.require(&Bounds::max_heap_size, "max_heap_size"))) {
        // Only stacks with ones above a non-one heap: the literal reading
        // "nimber = parity of the number of ones" is what is under test.
        auto k = tower_ones_on_top(p);
        if (!k || *k == 0 || *k == p.stack().size()) {
            continue;
        }
        ++r.positions_checked;
        Nimber literal{static_cast<std::uint32_t>(*k % 2)};
        Nimber oracle = solver.grundy(p);
        if (literal != oracle) {
            add_capped(r, total, {format_position(p), grundy_text(literal), grundy_text(oracle)});
        }
    }
    r.details = {{"total_mismatches", total}};
    r.status = Status::Informational;
    return r;
}

VerificationReport check_star_lemma(const Bounds& in)
{
    Bounds b = pick(in, {&Bounds::max_denominator, &Bounds::max_abs_value});
    auto r = make_report("star-lemma", b);
    const std::uint32_t den = b.require(&Bounds::max_denominator, "max_denominator");
    if ((den & (den - 1)) != 0) {
        throw std::invalid_argument("max_denominator must be a power of two");
    }
    unsigned exponent = 0;
    while ((1U << exponent) < den) {
        ++exponent;
    }
    const std::int64_t limit = static_cast<std::int64_t>(b.require(&Bounds::max_abs_value, "max_abs_value")) * den;
    const Game s = star();
    for (std::int64_t k = -limit; k <= limit; ++k) {
        Dyadic x(k, exponent);
        Game gx = number(x);
        Game x_star = gx + s;
        Game braces = make_game({gx}, {gx});
        ++r.positions_checked;
        if (braces != x_star) {
            r.mismatches.push_back({x.to_string() + " + *", format_value(braces), format_value(x_star)});
        }
        Game rebuilt = make_game({x_star}, {x_star});
        if (rebuilt != gx) {
            r.mismatches.push_back({"{" + x.to_string() + "* | " + x.to_string() + "*}", format_value(gx),
                                    format_value(rebuilt)});
        }
    }
    settle(r);
    return r;
}

VerificationReport check_head_optimality(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_vertices});
    auto r = make_report("head-optimality", b);
    PartizanSolver<ColPosition> solver(opt.engine);
    const std::uint32_t n_max = b.require(&Bounds::max_vertices, "max_vertices");
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        ColPosition path = ColPosition::path(std::vector<Color>(n, Color::Uncolored));
        for (Player who : {Player::Left, Player::Right}) {
            ++r.positions_checked;
            Game head = solver.value(path.apply(0, who));
            for (std::uint32_t v : path.moves(who)) {
                if (v == 0) {
                    continue;
                }
                Game other = solver.value(path.apply(v, who));
                bool ok = who == Player::Left ? leq(other, head) : leq(head, other);
                if (!ok) {
                    r.mismatches.push_back({format_col_path(path) + " " + std::string(to_string(who)) + " vertex " +
                                                std::to_string(v),
                                            "head " + format_value(head), format_value(other)});
                }
            }
        }
    }
    settle(r);
    return r;
}

VerificationReport check_tree_conjecture(const Bounds& in, const VerifyOptions& opt)
{
    Bounds b = pick(in, {&Bounds::max_vertices});
    auto r = make_report("tree-conjecture", b);
    const std::uint32_t v_max = b.require(&Bounds::max_vertices, "max_vertices");
    if (v_max < 3) {
        throw std::invalid_argument("tree conjecture needs max_vertices >= 3");
    }
    PartizanSolver<ColPosition> solver(opt.engine);

    nlohmann::ordered_json trees = nlohmann::ordered_json::array();
    std::uint64_t holds = 0;
    for (const std::string& shape : enumerate_tree_shapes(v_max, true)) {
        ColPosition tree = parse_col_tree(shape);
        TreeConjectureResult res = col_tree_conjecture_check(tree, solver);
        ++r.positions_checked;
        holds += res.holds ? 1 : 0;
        trees.push_back({{"tree", shape},
                         {"holds", res.holds},
                         {"lhs", format_value(res.lhs)},
                         {"rhs", format_value(res.rhs)}});
        if (!res.holds) {
            r.mismatches.push_back({shape, format_value(res.rhs), format_value(res.lhs)});
        }
    }

    // Values outside {number, number + *, nimber}: uncolored trees of every
    // shape, then the first colored tree realizing each further value.
    nlohmann::ordered_json uncolored = nlohmann::ordered_json::array();
    std::map<std::string, std::string> witnesses;
    std::map<std::string, std::pair<std::string, std::string>> non_integer; // value -> (kind, witness)
    std::uint64_t colored_scanned = 0;
    for (const std::string& shape : enumerate_tree_shapes(v_max)) {
        ColPosition tree = parse_col_tree(shape);
        Game g = solver.value(tree);
        if (!is_simple_value(g)) {
            uncolored.push_back({{"tree", shape}, {"value", format_value(g)}});
        }
        for (const ColPosition& colored : enumerate_colorings(tree)) {
            ++colored_scanned;
            Game cg = solver.value(colored);
            if (!is_simple_value(cg)) {
                witnesses.try_emplace(format_value(cg), col_text(colored));
            }
            if (auto kind = non_integer_kind(cg)) {
                non_integer.try_emplace(format_value(cg), *kind, col_text(colored));
            }
        }
    }
    nlohmann::ordered_json colored = nlohmann::ordered_json::array();
    for (const auto& [value, witness] : witnesses) {
        colored.push_back({{"value", value}, {"first_witness", witness}});
    }

    r.details = nlohmann::ordered_json::object();
    r.details["trees_holding"] = holds;
    r.details["trees"] = std::move(trees);
    r.details["non_simple_uncolored_trees"] = std::move(uncolored);
    r.details["colored_trees_scanned"] = colored_scanned;
    r.details["non_simple_colored_values"] = std::move(colored);
    nlohmann::ordered_json beyond = nlohmann::ordered_json::array();
    for (const auto& [value, entry] : non_integer) {
        beyond.push_back({{"value", value}, {"kind", entry.first}, {"first_witness", entry.second}});
    }
    r.details["non_integer_colored_values"] = std::move(beyond);
    r.status = Status::Informational;
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "nim",          "antonim",        "tower",           "rotisserie",
        "greedy",       "col-paths",      "star-lemma",      "adj-strategy",
        "adj-compare",  "head-optimality", "tree-conjecture", "adj-strategy-unscoped",
        "adjnim-indexing", "tower-parity-literal",
    };
    return names;
}

Bounds default_bounds(std::string_view suite)
{
    Bounds b;
    if (suite == "nim") {
        b.max_heaps = 4;
        b.max_heap_size = 8;
    } else if (suite == "antonim") {
        b.max_heaps = 3;
        b.max_heap_size = 15;
    } else if (suite == "tower" || suite == "tower-parity-literal") {
        b.max_length = 6;
        b.max_heap_size = 5;
    } else if (suite == "rotisserie") {
        b.max_length = 4;
        b.max_heap_size = 6;
        b.all_two_length = 5;
        b.all_two_heap_size = 4;
    } else if (suite == "greedy") {
        b.max_heaps = 5;
        b.max_heap_size = 6;
    } else if (suite == "col-paths") {
        b.max_vertices = 7;
    } else if (suite == "star-lemma") {
        b.max_denominator = 8;
        b.max_abs_value = 4;
    } else if (suite == "adj-strategy" || suite == "adj-strategy-unscoped" || suite == "adj-compare") {
        b.max_length = 4;
        b.max_heap_size = 5;
    } else if (suite == "adjnim-indexing") {
        b.max_length = 5;
        b.max_heap_size = 5;
    } else if (suite == "head-optimality") {
        b.max_vertices = 6;
    } else if (suite == "tree-conjecture") {
        b.max_vertices = 7;
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    return b;
}

VerificationReport run_suite(std::string_view suite, const Bounds& b, const VerifyOptions& opt)
{
    if (suite == "nim") return verify_nim(b, opt);
    if (suite == "antonim") return verify_antonim(b, opt);
    if (suite == "tower") return verify_tower(b, opt);
    if (suite == "rotisserie") return verify_rotisserie(b, opt);
    if (suite == "greedy") return verify_greedy(b, opt);
    if (suite == "col-paths") return verify_col_paths(b, opt);
    if (suite == "star-lemma") return check_star_lemma(b);
    if (suite == "adj-strategy") return check_adj_strategy(b, opt);
    if (suite == "adj-strategy-unscoped") return check_adj_strategy_unscoped(b, opt);
    if (suite == "adj-compare") return check_adj_compare(b, opt);
    if (suite == "adjnim-indexing") return check_adjnim_indexing(b, opt);
    if (suite == "tower-parity-literal") return check_tower_parity_literal(b, opt);
    if (suite == "head-optimality") return check_head_optimality(b, opt);
    if (suite == "tree-conjecture") return check_tree_conjecture(b, opt);
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

} // namespace cgt::verify
