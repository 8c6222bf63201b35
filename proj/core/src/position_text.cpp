#include "cgt/position_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool done()
    {
        skip_ws();
        return pos_ == text_.size();
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::uint32_t natural()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a natural number");
        }
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc{}) {
            pos_ = start;
            fail("heap size out of range");
        }
        return v;
    }

    char letter()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("expected a color letter U, B or R");
        }
        char c = text_[pos_];
        if (c != 'U' && c != 'B' && c != 'R') {
            fail("expected a color letter U, B or R");
        }
        ++pos_;
        return c;
    }

    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::uint32_t> parse_list(std::string_view text, char open, char close, bool wrapper_required)
{
    Cursor cur(text);
    bool wrapped = cur.accept(open);
    if (wrapper_required && !wrapped) {
        cur.fail(std::string("expected '") + open + "'");
    }
    std::vector<std::uint32_t> out;
    char end = wrapped ? close : '\0';
    if (cur.peek() != end) {
        out.push_back(cur.natural());
        while (cur.accept(',')) {
            out.push_back(cur.natural());
        }
    }
    if (wrapped) {
        cur.expect(close);
    }
    if (!cur.done()) {
        cur.fail("unexpected trailing text");
    }
    return out;
}

template <class P>
P construct(std::string_view text, std::vector<std::uint32_t> heaps)
{
    try {
        return P(std::move(heaps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid position \"") + std::string(text) + "\": " + e.what(), 0);
    }
}

std::string join(const std::vector<std::uint32_t>& v, char open, char close)
{
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(v[i]);
    }
    s += close;
    return s;
}

Color color_from_letter(char c)
{
    switch (c) {
    case 'B': return Color::Blue;
    case 'R': return Color::Red;
    default: return Color::Uncolored;
    }
}

std::string_view color_name(Color c)
{
    switch (c) {
    case Color::Uncolored: return "uncolored";
    case Color::Blue: return "blue";
    case Color::Red: return "red";
    }
    return "?";
}

bool is_simple_path(const ColPosition& p)
{
    if (p.arcs().size() + (p.size() == 0 ? 0 : 1) != p.size()) {
        return false;
    }
    for (std::uint32_t i = 0; i + 1 < p.size(); ++i) {
        if (p.arcs()[i] != ColPosition::Arc{i, i + 1}) {
            return false;
        }
    }
    return true;
}

struct TreeBuilder {
    std::vector<Color> colors;
    std::vector<ColPosition::Arc> arcs;

    std::uint32_t node(Cursor& cur)
    {
        auto id = static_cast<std::uint32_t>(colors.size());
        colors.push_back(color_from_letter(cur.letter()));
        if (cur.accept('(')) {
            do {
                std::uint32_t child = node(cur);
                arcs.emplace_back(id, child);
            } while (cur.accept(','));
            cur.expect(')');
        }
        return id;
    }
};

void format_tree_node(const ColPosition& p, std::uint32_t v, std::string& out)
{
    out += color_letter(p.color(v));
    const auto& kids = p.out_neighbors(v);
    if (kids.empty()) {
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        format_tree_node(p, kids[i], out);
    }
    out += ')';
}

} // namespace

NimPosition parse_nim(std::string_view text)
{
    return NimPosition(parse_list(text, '(', ')', false));
}

AntonimPosition parse_antonim(std::string_view text)
{
    return construct<AntonimPosition>(text, parse_list(text, '{', '}', true));
}

TowerNimPosition parse_tower(std::string_view text)
{
    return construct<TowerNimPosition>(text, parse_list(text, '(', ')', false));
}

RotisseriePosition parse_rotisserie(std::string_view text)
{
    return construct<RotisseriePosition>(text, parse_list(text, '(', ')', false));
}

GreedyNimPosition parse_greedy(std::string_view text)
{
    return construct<GreedyNimPosition>(text, parse_list(text, '(', ')', false));
}

ColPosition parse_col_path(std::string_view text)
{
    Cursor cur(text);
    bool wrapped = cur.accept('(');
    std::vector<Color> colors;
    char end = wrapped ? ')' : '\0';
    if (cur.peek() != end) {
        colors.push_back(color_from_letter(cur.letter()));
        while (cur.accept(',')) {
            colors.push_back(color_from_letter(cur.letter()));
        }
    }
    if (wrapped) {
        cur.expect(')');
    }
    if (!cur.done()) {
        cur.fail("unexpected trailing text");
    }
    return ColPosition::path(std::move(colors));
}

std::string format_position(const NimPosition& p)
{
    // Empty heaps carry no moves; dropping them keeps the text parseable.
    std::vector<std::uint32_t> nonzero;
    std::copy_if(p.heaps().begin(), p.heaps().end(), std::back_inserter(nonzero), [](auto h) { return h != 0; });
    return join(nonzero, '(', ')');
}

std::string format_position(const AntonimPosition& p)
{
    return join(p.heaps(), '{', '}');
}

std::string format_position(const TowerNimPosition& p)
{
    return join(p.stack(), '(', ')');
}

std::string format_position(const RotisseriePosition& p)
{
    return join(p.queue(), '(', ')');
}

std::string format_position(const GreedyNimPosition& p)
{
    return join(p.heaps(), '(', ')');
}

std::string format_col_path(const ColPosition& p)
{
    if (!is_simple_path(p)) {
        throw ShapeError("position is not a single path 0 -> 1 -> ... -> n-1");
    }
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += color_letter(p.colors()[i]);
    }
    return s;
}

ColPosition parse_col_graph_json(std::string_view json)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    try {
        const auto& vertices = doc.at("vertices");
        std::vector<Color> colors(vertices.size(), Color::Uncolored);
        std::vector<bool> seen(vertices.size(), false);
        for (const auto& v : vertices) {
            auto id = v.at("id").get<std::uint64_t>();
            if (id >= colors.size() || seen[id]) {
                throw ParseError("vertex ids must be exactly 0..n-1", 0);
            }
            seen[id] = true;
            auto name = v.at("color").get<std::string>();
            if (name == "uncolored") {
                colors[id] = Color::Uncolored;
            } else if (name == "blue") {
                colors[id] = Color::Blue;
            } else if (name == "red") {
                colors[id] = Color::Red;
            } else {
                throw ParseError("unknown color \"" + name + "\"", 0);
            }
        }
        std::vector<ColPosition::Arc> arcs;
        if (doc.contains("arcs")) {
            for (const auto& a : doc.at("arcs")) {
                if (!a.is_array() || a.size() != 2) {
                    throw ParseError("each arc must be a [from, to] pair", 0);
                }
                arcs.emplace_back(a[0].get<std::uint32_t>(), a[1].get<std::uint32_t>());
            }
        }
        return ColPosition(std::move(colors), std::move(arcs));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid graph: ") + e.what(), 0);
    }
}

std::string format_col_graph_json(const ColPosition& p)
{
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (std::uint32_t v = 0; v < p.size(); ++v) {
        nlohmann::ordered_json vertex;
        vertex["id"] = v;
        vertex["color"] = color_name(p.color(v));
        doc["vertices"].push_back(std::move(vertex));
    }
    doc["arcs"] = nlohmann::ordered_json::array();
    for (auto [from, to] : p.arcs()) {
        doc["arcs"].push_back({from, to});
    }
    return doc.dump();
}

ColPosition parse_col_tree(std::string_view text)
{
    Cursor cur(text);
    TreeBuilder builder;
    if (!cur.done()) {
        builder.node(cur);
    }
    if (!cur.done()) {
        cur.fail("unexpected trailing text");
    }
    return ColPosition(std::move(builder.colors), std::move(builder.arcs));
}

std::string format_col_tree(const ColPosition& p)
{
    if (p.size() == 0) {
        return "";
    }
    std::string out;
    format_tree_node(p, col_tree_root(p), out);
    return out;
}

ColPosition load_col_graph(const std::string& arg)
{
    std::size_t first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return ColPosition{};
    }
    char c = arg[first];
    if (c == '{') {
        return parse_col_graph_json(arg);
    }
    if ((c == 'U' || c == 'B' || c == 'R') && (arg.size() == first + 1 || arg.find('(') != std::string::npos ||
                                               arg.find_first_not_of(" \t\r\n", first + 1) == std::string::npos)) {
        return parse_col_tree(arg);
    }
    std::ifstream in(arg);
    if (!in) {
        throw ParseError("cannot open graph file \"" + arg + "\"", 0);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_col_graph_json(buf.str());
}

std::string format_col_any(const ColPosition& p)
{
    try {
        return format_col_tree(p);
    } catch (const ShapeError&) {
        return format_col_graph_json(p);
    }
}

} // namespace cgt
