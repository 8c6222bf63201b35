#include "cgt/verify/report.hpp"

#include <sstream>
#include <stdexcept>

namespace cgt::verify {
namespace {

using Field = std::optional<std::uint32_t> Bounds::*;

struct NamedField {
    Field field;
    const char* name;
};

constexpr NamedField kFields[] = {
    {&Bounds::max_heaps, "max_heaps"},
    {&Bounds::max_length, "max_length"},
    {&Bounds::max_heap_size, "max_heap_size"},
    {&Bounds::max_vertices, "max_vertices"},
    {&Bounds::max_denominator, "max_denominator"},
    {&Bounds::max_abs_value, "max_abs_value"},
    {&Bounds::all_two_length, "all_two_length"},
    {&Bounds::all_two_heap_size, "all_two_heap_size"},
};

} // namespace

void Bounds::validate() const
{
    for (const NamedField& f : kFields) {
        const auto& v = this->*(f.field);
        if (v && *v == 0) {
            throw std::invalid_argument(std::string("bound ") + f.name + " must be at least 1");
        }
    }
}

std::uint32_t Bounds::require(std::optional<std::uint32_t> Bounds::*field, std::string_view name) const
{
    const auto& v = this->*field;
    if (!v) {
        throw std::invalid_argument("missing bound " + std::string(name));
    }
    if (*v == 0) {
        throw std::invalid_argument("bound " + std::string(name) + " must be at least 1");
    }
    return *v;
}

nlohmann::ordered_json Bounds::to_json() const
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const NamedField& f : kFields) {
        if (const auto& v = this->*(f.field)) {
            j[f.name] = *v;
        }
    }
    return j;
}

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Informational:
        return "informational";
    }
    return "?";
}

nlohmann::ordered_json VerificationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["check"] = check;
    j["bounds"] = bounds.to_json();
    j["positions_checked"] = positions_checked;
    j["status"] = std::string(to_string(status));
    auto& list = j["mismatches"] = nlohmann::ordered_json::array();
    for (const Mismatch& m : mismatches) {
        list.push_back({{"position", m.position}, {"closed", m.closed}, {"oracle", m.oracle}});
    }
    if (!details.is_null()) {
        j["details"] = details;
    }
    return j;
}

std::string VerificationReport::to_text() const
{
    std::ostringstream out;
    out << check << ": " << to_string(status) << '\n';
    out << "  bounds:";
    const auto bounds_json = bounds.to_json();
    for (const auto& [name, value] : bounds_json.items()) {
        out << ' ' << name << '=' << value.get<std::uint32_t>();
    }
    out << '\n';
    out << "  positions checked: " << positions_checked << '\n';
    out << "  mismatches: " << mismatches.size() << '\n';
    for (const Mismatch& m : mismatches) {
        out << "    " << m.position << "  closed " << m.closed << "  oracle " << m.oracle << '\n';
    }
    if (!details.is_null()) {
        for (const auto& [name, value] : details.items()) {
            if (value.is_array()) {
                out << "  " << name << ": " << value.size() << '\n';
                for (const auto& row : value) {
                    out << "    " << (row.is_string() ? row.get<std::string>() : row.dump()) << '\n';
                }
            } else {
                out << "  " << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
    }
    return out.str();
}

} // namespace cgt::verify
