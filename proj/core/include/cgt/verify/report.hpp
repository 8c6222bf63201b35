#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace cgt::verify {

/// Size limits for a sweep. Only the fields a check uses are set; every set
/// field must be at least 1.
struct Bounds {
    std::optional<std::uint32_t> max_heaps;
    std::optional<std::uint32_t> max_length;
    std::optional<std::uint32_t> max_heap_size;
    std::optional<std::uint32_t> max_vertices;
    std::optional<std::uint32_t> max_denominator;
    std::optional<std::uint32_t> max_abs_value;
    /// Extra sweep of queues whose heaps are all >= 2.
    std::optional<std::uint32_t> all_two_length;
    std::optional<std::uint32_t> all_two_heap_size;

    /// Throws std::invalid_argument naming the first zero field.
    void validate() const;
    /// Value of a field the caller requires; throws std::invalid_argument if unset.
    std::uint32_t require(std::optional<std::uint32_t> Bounds::*field, std::string_view name) const;

    /// Set fields only, in declaration order.
    nlohmann::ordered_json to_json() const;
};

enum class Status { Pass, Fail, Informational };

std::string_view to_string(Status s) noexcept;

struct Mismatch {
    std::string position;
    std::string closed;
    std::string oracle;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Result of one sweep. Theorem checks pass iff `mismatches` is empty;
/// conjecture and reading-comparison checks are informational.
struct VerificationReport {
    std::string check;
    Bounds bounds;
    std::uint64_t positions_checked = 0;
    Status status = Status::Pass;
    std::vector<Mismatch> mismatches;
    /// Check-specific tables, emitted after the schema fields; null when absent.
    nlohmann::ordered_json details;

    /// {"check","bounds","positions_checked","status","mismatches"[,"details"]}
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

} // namespace cgt::verify
