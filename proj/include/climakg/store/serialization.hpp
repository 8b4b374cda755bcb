#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "climakg/store/graph.hpp"

namespace climakg::store {

// Parses line-oriented N-Triples and inserts every statement. Returns the
// number of triples that were new to the graph. Throws SyntaxError carrying the
// line and column of the first malformed statement; nothing is inserted in that
// case.
std::size_t LoadNTriples(Graph& graph, std::string_view document);

// Parses the supported Turtle subset: @prefix / PREFIX directives, prefixed
// names, the 'a' keyword, ';' predicate lists, ',' object lists and
// numeric/boolean/string literal shorthand. Collections '( )' and blank-node
// property lists '[ ]' are rejected. Throws SyntaxError or UnknownPrefix.
std::size_t LoadTurtle(Graph& graph, std::string_view document);

// Deterministic N-Triples: one statement per line, sorted by the N-Triples
// string forms of subject, predicate and object.
std::string SerializeNTriples(const Graph& graph);

}  // namespace climakg::store
