#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cgt/engine.hpp"
#include "cgt/errors.hpp"
#include "cgt/position_text.hpp"
#include "cgt/rulesets/antonim.hpp"
#include "cgt/rulesets/greedy_nim.hpp"
#include "cgt/rulesets/myopic_col.hpp"
#include "cgt/rulesets/nim.hpp"
#include "cgt/rulesets/rotisserie.hpp"
#include "cgt/rulesets/tower_nim.hpp"
#include "cgt/value_text.hpp"
#include "cgt/verify/checks.hpp"

namespace cgt::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::string target; // ruleset or suite
    std::string position;
    std::string format = "text";
    bool force_oracle = false;
    bool all = false;
    bool path_formula = false;
    std::string player;
    std::string indexing = "one-based";
    std::optional<std::size_t> memo_cap;
    verify::Bounds bounds;

    bool json() const { return format == "json"; }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

EngineConfig engine_config(const Config& cfg)
{
    EngineConfig ec;
    if (const char* env = std::getenv("CGT_MEMO_CAP"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0' || v == 0) {
            throw UsageError("CGT_MEMO_CAP must be a positive integer");
        }
        ec.memo_cap = static_cast<std::size_t>(v);
    }
    if (cfg.memo_cap) {
        if (*cfg.memo_cap == 0) {
            throw UsageError("--memo-cap must be positive");
        }
        ec.memo_cap = *cfg.memo_cap;
    }
    return ec;
}

AdjNimIndexing indexing(const Config& cfg)
{
    return cfg.indexing == "zero-based" ? AdjNimIndexing::ZeroBased : AdjNimIndexing::OneBased;
}

void emit(const Config& cfg, std::ostream& out, const Json& j, const std::string& text)
{
    if (cfg.json()) {
        out << j.dump(2) << '\n';
    } else {
        out << text;
    }
}

// Closed-form facts a ruleset offers for one position.
struct ClosedForm {
    std::optional<Outcome> outcome;
    std::optional<Nimber> grundy;
    bool show_grundy = false;
    std::string note; // printed when the engine is used for lack of a formula
};

template <class P>
int solve_impartial(const Config& cfg, std::ostream& out, const P& p, const ClosedForm& closed)
{
    Outcome outcome;
    std::optional<Nimber> grundy;
    bool used_closed = !cfg.force_oracle && closed.outcome.has_value();
    if (used_closed) {
        outcome = *closed.outcome;
        grundy = closed.grundy;
    } else {
        ImpartialSolver<P> solver(engine_config(cfg));
        grundy = solver.grundy(p);
        outcome = grundy->value == 0 ? Outcome::P : Outcome::N;
    }
    if (!closed.show_grundy) {
        grundy.reset();
    }
    const char* method = used_closed ? "closed-form" : "oracle";
    bool with_note = !closed.outcome && !closed.note.empty();

    Json j;
    j["ruleset"] = cfg.target;
    j["position"] = format_position(p);
    j["outcome"] = std::string(to_string(outcome));
    if (grundy) {
        j["grundy"] = grundy->value;
    }
    j["method"] = method;
    if (with_note) {
        j["note"] = closed.note;
    }
    std::string text = std::string(to_string(outcome)) + " (";
    if (grundy) {
        text += "grundy " + std::to_string(grundy->value) + ", ";
    }
    text += std::string(method) + ")\n";
    if (with_note) {
        text += "note: " + closed.note + "\n";
    }
    emit(cfg, out, j, text);
    return kOk;
}

template <class P>
int value_impartial(const Config& cfg, std::ostream& out, const P& p, const ClosedForm& closed)
{
    std::optional<Nimber> grundy;
    bool used_closed = !cfg.force_oracle && closed.grundy.has_value();
    if (used_closed) {
        grundy = closed.grundy;
    } else {
        ImpartialSolver<P> solver(engine_config(cfg));
        grundy = solver.grundy(p);
    }
    std::string value = grundy->value == 0 ? "0" : grundy->value == 1 ? "*" : "*" + std::to_string(grundy->value);
    Outcome outcome = grundy->value == 0 ? Outcome::P : Outcome::N;
    Json j;
    j["ruleset"] = cfg.target;
    j["position"] = format_position(p);
    j["value"] = value;
    j["outcome"] = std::string(to_string(outcome));
    j["method"] = used_closed ? "closed-form" : "oracle";
    emit(cfg, out, j, value + " (" + std::string(to_string(outcome)) + ")\n");
    return kOk;
}

template <class P>
int moves_impartial(const Config& cfg, std::ostream& out, std::ostream& err, const P& p)
{
    std::vector<P> options;
    if (cfg.all) {
        options = p.options();
    } else {
        ImpartialSolver<P> solver(engine_config(cfg));
        options = solver.winning_moves(p);
    }
    std::vector<std::string> texts;
    std::set<std::string> seen;
    for (const P& o : options) {
        std::string t = format_position(o);
        if (seen.insert(t).second) {
            texts.push_back(std::move(t));
        }
    }
    Json j;
    j["ruleset"] = cfg.target;
    j["position"] = format_position(p);
    j["kind"] = cfg.all ? "all" : "winning";
    j["moves"] = texts;
    std::string text;
    for (const auto& t : texts) {
        text += t + "\n";
    }
    emit(cfg, out, j, text);
    if (texts.empty() && !cfg.json()) {
        err << (cfg.all ? "no legal moves\n" : "no winning moves\n");
    }
    return kOk;
}

template <class P>
int dispatch_impartial(const Config& cfg, std::ostream& out, std::ostream& err, const P& p, const ClosedForm& closed)
{
    if (cfg.command == "solve") {
        return solve_impartial(cfg, out, p, closed);
    }
    if (cfg.command == "value") {
        return value_impartial(cfg, out, p, closed);
    }
    return moves_impartial(cfg, out, err, p);
}

int run_col(const Config& cfg, std::ostream& out, std::ostream& err)
{
    const bool is_path = cfg.target == "col-path";
    ColPosition p = is_path ? parse_col_path(cfg.position) : load_col_graph(cfg.position);
    auto text_of = [&](const ColPosition& q) { return is_path ? format_col_path(q) : format_col_any(q); };
    // Paths default to the formula, general graphs to search.
    bool use_formula = !cfg.force_oracle && (is_path || cfg.path_formula);

    Json j;
    j["ruleset"] = cfg.target;
    j["position"] = text_of(p);

    if (cfg.command == "solve" || cfg.command == "value") {
        Game value;
        Outcome outcome;
        PartizanSolver<ColPosition> solver(engine_config(cfg));
        if (use_formula) {
            value = col_decompose_paths(p).value;
            outcome = outcome_of_value(value);
        } else {
            outcome = solver.outcome(p);
            if (cfg.command == "value") {
                value = solver.value(p);
            }
        }
        const char* method = use_formula ? "closed-form" : "oracle";
        std::string outcome_text(to_string(outcome));
        if (cfg.command == "solve") {
            j["outcome"] = outcome_text;
            j["method"] = method;
            emit(cfg, out, j, outcome_text + " (" + method + ")\n");
        } else {
            std::string v = format_value(value);
            j["value"] = v;
            j["outcome"] = outcome_text;
            j["method"] = method;
            emit(cfg, out, j, v + " (" + outcome_text + ")\n");
        }
        return kOk;
    }

    if (cfg.player.empty()) {
        throw UsageError("moves on Col needs --player blue|red");
    }
    Player who = cfg.player == "blue" ? Player::Left : Player::Right;
    PartizanSolver<ColPosition> solver(engine_config(cfg));
    Json list = Json::array();
    std::string text;
    for (std::uint32_t v : p.moves(who)) {
        ColPosition next = p.apply(v, who);
        if (!cfg.all && solver.wins_moving_first(next, opponent(who))) {
            continue;
        }
        list.push_back({{"vertex", v}, {"position", text_of(next)}});
        text += "color vertex " + std::to_string(v) + "\n";
    }
    j["player"] = cfg.player;
    j["kind"] = cfg.all ? "all" : "winning";
    j["moves"] = list;
    emit(cfg, out, j, text);
    if (list.empty() && !cfg.json()) {
        err << (cfg.all ? "no legal moves\n" : "no winning moves\n");
    }
    return kOk;
}

int run_position_command(const Config& cfg, std::ostream& out, std::ostream& err)
{
    const std::string& r = cfg.target;
    if (r == "nim") {
        NimPosition p = parse_nim(cfg.position);
        Nimber g = nim_grundy_closed(p);
        return dispatch_impartial(cfg, out, err, p, {g.value == 0 ? Outcome::P : Outcome::N, g, true, ""});
    }
    if (r == "antonim") {
        AntonimPosition p = parse_antonim(cfg.position);
        ClosedForm c;
        if (p.heaps().size() <= 3) {
            c.outcome = antonim_outcome_closed(p);
        }
        c.note = "no closed form is known for four or more piles";
        return dispatch_impartial(cfg, out, err, p, c);
    }
    if (r == "tower") {
        TowerNimPosition p = parse_tower(cfg.position);
        return dispatch_impartial(cfg, out, err, p, {tower_outcome_closed(p), tower_nimber_closed(p), true, ""});
    }
    if (r == "rotisserie") {
        RotisseriePosition p = parse_rotisserie(cfg.position);
        ClosedForm c;
        c.outcome = rotisserie_outcome_closed(p, indexing(cfg));
        c.note = "no closed form covers queues of four or more heaps containing a 1";
        return dispatch_impartial(cfg, out, err, p, c);
    }
    if (r == "greedy") {
        GreedyNimPosition p = parse_greedy(cfg.position);
        return dispatch_impartial(cfg, out, err, p, {greedy_outcome_closed(p), std::nullopt, false, ""});
    }
    if (r == "col-path" || r == "col-graph") {
        return run_col(cfg, out, err);
    }
    throw UsageError("unknown ruleset '" + r + "' (nim, antonim, tower, rotisserie, greedy, col-path, col-graph)");
}

int run_report(const Config& cfg, std::ostream& out, const verify::VerificationReport& report)
{
    emit(cfg, out, report.to_json(), report.to_text());
    return report.status == verify::Status::Fail ? kVerifyFailed : kOk;
}

void apply_overrides(verify::Bounds& b, const verify::Bounds& o)
{
    for (auto f : {&verify::Bounds::max_heaps, &verify::Bounds::max_length, &verify::Bounds::max_heap_size,
                   &verify::Bounds::max_vertices, &verify::Bounds::max_denominator, &verify::Bounds::max_abs_value,
                   &verify::Bounds::all_two_length, &verify::Bounds::all_two_heap_size}) {
        if (o.*f) {
            b.*f = o.*f;
        }
    }
}

int run_verify(const Config& cfg, std::ostream& out)
{
    verify::Bounds b;
    try {
        b = verify::default_bounds(cfg.target);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    apply_overrides(b, cfg.bounds);
    try {
        b.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    verify::VerifyOptions opt{engine_config(cfg), indexing(cfg)};
    return run_report(cfg, out, verify::run_suite(cfg.target, b, opt));
}

int run_conjecture(const Config& cfg, std::ostream& out)
{
    verify::Bounds b = verify::default_bounds("tree-conjecture");
    apply_overrides(b, cfg.bounds);
    if (*b.max_vertices < 3) {
        throw UsageError("--max-vertices must be at least 3");
    }
    verify::VerifyOptions opt{engine_config(cfg), indexing(cfg)};
    return run_report(cfg, out, verify::check_tree_conjecture(b, opt));
}

void add_common(CLI::App& sub, Config& cfg)
{
    sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub.add_option("--memo-cap", cfg.memo_cap, "Memo table entry cap (default from CGT_MEMO_CAP or 50000000)");
    sub.add_option("--adjnim-indexing", cfg.indexing, "Reading of the Rotisserie minimum-index rule")
        ->check(CLI::IsMember({"one-based", "zero-based"}));
}

void add_bounds(CLI::App& sub, Config& cfg)
{
    auto& b = cfg.bounds;
    sub.add_option("--max-heaps", b.max_heaps, "Maximum number of heaps or piles");
    sub.add_option("--max-heap-size", b.max_heap_size, "Maximum heap size");
    sub.add_option("--max-length", b.max_length, "Maximum stack or queue length");
    sub.add_option("--max-vertices", b.max_vertices, "Maximum vertex count");
    sub.add_option("--denominator-max", b.max_denominator, "Largest denominator (a power of two)");
    sub.add_option("--max-abs", b.max_abs_value, "Largest absolute value");
    sub.add_option("--all-two-length", b.all_two_length, "Queue length for the all-heaps->=2 sweep");
    sub.add_option("--all-two-heap-size", b.all_two_heap_size, "Heap size for the all-heaps->=2 sweep");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Combinatorial game workbench: exact solving, canonical values and closed-form verification", "cgt"};
    app.require_subcommand(1);

    for (const char* name : {"solve", "value", "moves"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "solve"   ? "Outcome class of a position"
                                             : std::string(name) == "value" ? "Canonical value of a position"
                                                                            : "Winning (or all) moves from a position");
        sub->add_option("ruleset", cfg.target, "nim, antonim, tower, rotisserie, greedy, col-path, col-graph")
            ->required();
        sub->add_option("position", cfg.position, "Position text, or for col-graph a JSON file / tree shorthand")
            ->required();
        sub->add_flag("--force-oracle", cfg.force_oracle, "Use exhaustive search even when a formula applies");
        sub->add_flag("--path-formula", cfg.path_formula, "Evaluate a col-graph made of paths by formula");
        if (std::string(name) == "moves") {
            sub->add_option("--player", cfg.player, "Mover for Col")->check(CLI::IsMember({"blue", "red"}));
            sub->add_flag("--all", cfg.all, "List every legal move");
        }
        add_common(*sub, cfg);
        sub->callback([&cfg, name] { cfg.command = name; });
    }
    auto* verify_cmd = app.add_subcommand("verify", "Check closed forms and lemmas against exhaustive search");
    std::string suites;
    for (const auto& s : verify::suite_names()) {
        suites += (suites.empty() ? "" : ", ") + s;
    }
    verify_cmd->add_option("suite", cfg.target, suites)->required();
    add_bounds(*verify_cmd, cfg);
    add_common(*verify_cmd, cfg);
    verify_cmd->callback([&cfg] { cfg.command = "verify"; });

    auto* conj = app.add_subcommand("conjecture", "Sweep the rooted binary tree conjecture for Myopic Col");
    add_bounds(*conj, cfg);
    add_common(*conj, cfg);
    conj->callback([&cfg] { cfg.command = "conjecture"; });

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("cgt");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (cfg.command == "verify") {
            return run_verify(cfg, out);
        }
        if (cfg.command == "conjecture") {
            return run_conjecture(cfg, out);
        }
        return run_position_command(cfg, out, err);
    } catch (const ParseError& e) {
        err << "error: cannot parse position: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return kShape;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace cgt::cli
