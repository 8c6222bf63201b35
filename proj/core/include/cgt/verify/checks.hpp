#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/rulesets/rotisserie.hpp"
#include "cgt/verify/enumerate.hpp"
#include "cgt/verify/report.hpp"

namespace cgt::verify {

struct VerifyOptions {
    EngineConfig engine;
    AdjNimIndexing adjnim_indexing = AdjNimIndexing::OneBased;
};

// Closed form against exhaustive search, one ruleset per call. Every
// enumerated position where the closed form is defined is compared; all
// disagreements are listed.

/// Bouton's rule on every ordered list of max_heaps heaps in 0..max_heap_size.
VerificationReport verify_nim(const Bounds& b, const VerifyOptions& opt = {});
/// Up to three piles; larger sets in range are skipped (no closed form).
VerificationReport verify_antonim(const Bounds& b, const VerifyOptions& opt = {});
/// Outcome classifier and every characterized nimber family.
VerificationReport verify_tower(const Bounds& b, const VerifyOptions& opt = {});
/// Every applicable queue theorem, plus the all->=2 extension sweep.
VerificationReport verify_rotisserie(const Bounds& b, const VerifyOptions& opt = {});
VerificationReport verify_greedy(const Bounds& b, const VerifyOptions& opt = {});
/// a x * + b - c and the single-path formula against search values.
VerificationReport verify_col_paths(const Bounds& b, const VerifyOptions& opt = {});

/// Dispatches to the verify_* function for a ruleset (ColTree is rejected).
VerificationReport verify_closed_forms(Ruleset ruleset, const Bounds& b, const VerifyOptions& opt = {});

/// Queue strategy lemma: if L and its tail (a_1..a_n) are both N, moving to
/// (a_1..a_n, 1) wins for an odd heap count and (a_1..a_n, a_0 - 1) for an even one.
VerificationReport check_adj_strategy(const Bounds& b, const VerifyOptions& opt = {});
/// Same implications assuming only L in N. Informational.
VerificationReport check_adj_strategy_unscoped(const Bounds& b, const VerifyOptions& opt = {});
/// If L is P, lowering even-index heaps (to >= 1) and raising odd-index heaps keeps it P.
VerificationReport check_adj_compare(const Bounds& b, const VerifyOptions& opt = {});
/// Both readings of the minimum-index rule against search. Informational.
VerificationReport check_adjnim_indexing(const Bounds& b, const VerifyOptions& opt = {});
/// Literal "nimber is the parity of the number of ones on top" reading. Informational.
VerificationReport check_tower_parity_literal(const Bounds& b, const VerifyOptions& opt = {});

/// x + * = {x|x} and x = {x+*|x+*} for every dyadic x with denominator
/// dividing max_denominator and |x| <= max_abs_value.
VerificationReport check_star_lemma(const Bounds& b);
/// On paths of up to max_vertices uncolored vertices (also followed by one
/// blue or red vertex), coloring the head is at least as good as any other
/// move for both players.
VerificationReport check_head_optimality(const Bounds& b, const VerifyOptions& opt = {});
/// G(T0) = * + G(T1) + G(T2) on every tree of 3..max_vertices vertices
/// whose root has two children. Informational; also lists trees and
/// colored trees whose values are not numbers, nimbers or number + *.
VerificationReport check_tree_conjecture(const Bounds& b, const VerifyOptions& opt = {});

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();
/// Default bounds for a suite. Throws std::invalid_argument for unknown names.
Bounds default_bounds(std::string_view suite);
/// Runs a suite by name. Throws std::invalid_argument for unknown names.
VerificationReport run_suite(std::string_view suite, const Bounds& b, const VerifyOptions& opt = {});

} // namespace cgt::verify
