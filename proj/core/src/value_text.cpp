#include "cgt/value_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

std::string format_value(Game g)
{
    if (auto d = g.number()) {
        return d->to_string();
    }
    if (auto k = g.nimber()) {
        return *k == 1 ? std::string("*") : "*" + std::to_string(*k);
    }
    if (auto x = g.number_plus_star()) {
        return x->to_string() + "*";
    }
    auto side = [](std::span<const Game> opts) {
        std::vector<std::string> parts;
        parts.reserve(opts.size());
        for (Game o : opts) {
            parts.push_back(format_value(o));
        }
        std::sort(parts.begin(), parts.end());
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += parts[i];
        }
        return out;
    };
    return "{" + side(g.left_options()) + "|" + side(g.right_options()) + "}";
}

namespace {

class ValueParser {
public:
    explicit ValueParser(std::string_view text) : text_(text) {}

    Game parse_all()
    {
        Game g = parse_value();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing text");
        }
        return g;
    }

    Dyadic parse_number_only()
    {
        skip_ws();
        Dyadic d = parse_number();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing text");
        }
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_digit()
    {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    void expect(char c)
    {
        if (!at(c)) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::uint64_t parse_digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc{}) {
            pos_ = start;
            fail("integer out of range");
        }
        return v;
    }

    Dyadic parse_number()
    {
        bool negative = false;
        if (at('-')) {
            negative = true;
            ++pos_;
        }
        std::size_t start = pos_;
        std::uint64_t num = parse_digits();
        if (num > static_cast<std::uint64_t>(INT64_MAX)) {
            pos_ = start;
            fail("integer out of range");
        }
        unsigned exponent = 0;
        if (at('/')) {
            ++pos_;
            std::size_t den_at = pos_;
            std::uint64_t den = parse_digits();
            if (den == 0 || (den & (den - 1)) != 0) {
                pos_ = den_at;
                fail("denominator must be a power of two");
            }
            while ((std::uint64_t{1} << exponent) != den) {
                ++exponent;
            }
        }
        auto n = static_cast<std::int64_t>(num);
        try {
            return Dyadic(negative ? -n : n, exponent);
        } catch (const OverflowError&) {
            pos_ = start;
            fail("number out of range");
        }
    }

    Game parse_value()
    {
        if (at('{')) {
            ++pos_;
            std::vector<Game> left = parse_side('|');
            expect('|');
            std::vector<Game> right = parse_side('}');
            expect('}');
            return make_game(left, right);
        }
        if (at('*')) {
            ++pos_;
            if (!at_digit()) {
                return star();
            }
            std::size_t start = pos_;
            std::uint64_t k = parse_digits();
            if (k < 2) {
                pos_ = start;
                fail("nimbers below *2 are spelled \"0\" and \"*\"");
            }
            try {
                return nimber_value(static_cast<std::uint32_t>(std::min<std::uint64_t>(k, UINT32_MAX)));
            } catch (const BoundError& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        if (at('-') || at_digit()) {
            Dyadic d = parse_number();
            Game g = number(d);
            if (at('*')) {
                ++pos_;
                return add(g, star());
            }
            return g;
        }
        fail("expected a value");
    }

    std::vector<Game> parse_side(char terminator)
    {
        std::vector<Game> opts;
        if (at(terminator)) {
            return opts;
        }
        opts.push_back(parse_value());
        while (at(',')) {
            ++pos_;
            opts.push_back(parse_value());
        }
        return opts;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Game parse_value(std::string_view text)
{
    return ValueParser(text).parse_all();
}

Dyadic parse_dyadic(std::string_view text)
{
    return ValueParser(text).parse_number_only();
}

} // namespace cgt
