#include "cgt/rulesets/rotisserie.hpp"

#include <algorithm>
#include <stdexcept>

#include "key_encoding.hpp"

namespace cgt {

RotisseriePosition::RotisseriePosition(std::vector<std::uint32_t> queue) : queue_(std::move(queue))
{
    if (std::find(queue_.begin(), queue_.end(), 0u) != queue_.end()) {
        throw std::invalid_argument("Rotisserie Nim heaps must be positive");
    }
}

std::vector<RotisseriePosition> RotisseriePosition::options() const
{
    std::vector<RotisseriePosition> out;
    if (queue_.empty()) {
        return out;
    }
    std::vector<std::uint32_t> rest(queue_.begin() + 1, queue_.end());
    out.emplace_back(rest);
    for (std::uint32_t b = 1; b < queue_.front(); ++b) {
        std::vector<std::uint32_t> next = rest;
        next.push_back(b);
        out.emplace_back(std::move(next));
    }
    return out;
}

std::string RotisseriePosition::key() const
{
    return detail::encode_key('r', queue_);
}

std::optional<Outcome> rotisserie_two_heap_rule(const RotisseriePosition& p)
{
    const auto& q = p.queue();
    if (q.size() != 2) {
        return std::nullopt;
    }
    return q[0] > q[1] ? Outcome::N : Outcome::P;
}

std::optional<Outcome> rotisserie_three_heap_rule(const RotisseriePosition& p)
{
    const auto& q = p.queue();
    if (q.size() != 3) {
        return std::nullopt;
    }
    if (q[0] == 1) {
        return q[1] > q[2] ? Outcome::P : Outcome::N;
    }
    return (q[1] > 1 && q[2] == 1) ? Outcome::P : Outcome::N;
}

std::optional<Outcome> rotisserie_min_index_rule(const RotisseriePosition& p, AdjNimIndexing indexing)
{
    const auto& q = p.queue();
    if (q.empty() || std::any_of(q.begin(), q.end(), [](std::uint32_t h) { return h < 2; })) {
        return std::nullopt;
    }
    auto first_min = static_cast<std::size_t>(std::min_element(q.begin(), q.end()) - q.begin());
    bool next_wins = false;
    if (indexing == AdjNimIndexing::OneBased) {
        std::size_t m = q.size();
        std::size_t j = first_min + 1;
        next_wins = (m % 2 == 1) || (j % 2 == 0);
    } else {
        std::size_t n = q.size() - 1;
        std::size_t j = first_min;
        next_wins = (n % 2 == 1) || (j % 2 == 0);
    }
    return next_wins ? Outcome::N : Outcome::P;
}

std::optional<Outcome> rotisserie_outcome_closed(const RotisseriePosition& p, AdjNimIndexing indexing)
{
    const auto& q = p.queue();
    if (q.empty()) {
        return Outcome::P;
    }
    if (q.size() == 1) {
        return Outcome::N;
    }
    if (auto r = rotisserie_min_index_rule(p, indexing)) {
        return r;
    }
    if (auto r = rotisserie_two_heap_rule(p)) {
        return r;
    }
    return rotisserie_three_heap_rule(p);
}

} // namespace cgt
