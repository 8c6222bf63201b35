#pragma once

#include <string>
#include <string_view>

#include "cgt/rulesets/antonim.hpp"
#include "cgt/rulesets/greedy_nim.hpp"
#include "cgt/rulesets/myopic_col.hpp"
#include "cgt/rulesets/nim.hpp"
#include "cgt/rulesets/rotisserie.hpp"
#include "cgt/rulesets/tower_nim.hpp"

namespace cgt {

// Position grammars. Lists are comma-separated naturals, optionally wrapped
// in parentheses: "3,5,7" or "(3,5,7)"; the empty list is "" or "()".
// Antonim sets are braced: "{1,3,5}". Tower stacks are bottom to top,
// Rotisserie queues front to back. Col paths are letters U/B/R with arcs
// left to right: "U,U,B". Whitespace is ignored. Every parser throws
// ParseError on malformed text or on values the ruleset forbids.
//
// The formatters emit the parenthesized list form, which re-parses to an
// equal position.

NimPosition parse_nim(std::string_view text);
AntonimPosition parse_antonim(std::string_view text);
TowerNimPosition parse_tower(std::string_view text);
RotisseriePosition parse_rotisserie(std::string_view text);
GreedyNimPosition parse_greedy(std::string_view text);
ColPosition parse_col_path(std::string_view text);

/// Empty heaps are omitted: (0,2) prints as (2).
std::string format_position(const NimPosition& p);
std::string format_position(const AntonimPosition& p);
std::string format_position(const TowerNimPosition& p);
std::string format_position(const RotisseriePosition& p);
std::string format_position(const GreedyNimPosition& p);

/// "U,U,B". Throws ShapeError unless p is exactly the path 0 -> 1 -> ... -> n-1.
std::string format_col_path(const ColPosition& p);

/// {"vertices":[{"id":0,"color":"uncolored"},...],"arcs":[[0,1],...]}
/// Vertex ids must be exactly 0..n-1, in any order.
ColPosition parse_col_graph_json(std::string_view json);
std::string format_col_graph_json(const ColPosition& p);

/// Rooted-tree shorthand: NODE := COLOR ['(' NODE (',' NODE)* ')'] with
/// COLOR in U/B/R, arcs parent -> child, vertices numbered in preorder.
/// "U(U,U)" is an uncolored root with two uncolored leaves.
ColPosition parse_col_tree(std::string_view text);
/// Throws ShapeError unless p is a rooted out-tree.
std::string format_col_tree(const ColPosition& p);

/// Col graph from any of: a tree shorthand, inline JSON, or JSON file path.
ColPosition load_col_graph(const std::string& arg);

/// Tree shorthand when p is a rooted out-tree (paths included), otherwise
/// the JSON document. Either form is accepted by load_col_graph.
std::string format_col_any(const ColPosition& p);

} // namespace cgt
