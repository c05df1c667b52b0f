#pragma once

#include <string>

#include "graphalg/graph.hpp"
#include "graphalg/verify.hpp"

namespace graphalg {

/// Parses the line-oriented graph format:
///   vertex <id>
///   edge <id> <dom> <ran> [<mult>|inf]
/// '#' starts a comment; ids are arbitrary non-whitespace tokens; vertices
/// must be declared before an edge uses them. Errors carry the line number.
Graph parse_graph_file(const std::string& text);

/// Canonical text form; parse(serialize(g)) reproduces g exactly.
std::string serialize_graph(const Graph& g);

/// Parses the family JSON {"dim": n, "P": {vertex: matrix}, "S": {edge:
/// matrix}} with complex entries written as [re, im] pairs.
OperatorFamily parse_family_json(const std::string& text);

}  // namespace graphalg
