#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "climakg/rdf/term.hpp"
#include "climakg/sparql/ast.hpp"
#include "climakg/store/graph.hpp"

namespace climakg::sparql {

// A partial mapping from variable name to term.
using Binding = std::map<std::string, rdf::Term>;

// Ordered solution rows. Row i, column j holds the binding of variables[j],
// or nullopt when that variable is unbound in the row.
struct SolutionSequence {
  std::vector<std::string> variables;
  std::vector<std::vector<std::optional<rdf::Term>>> rows;

  Binding RowBinding(std::size_t row) const;
};

// Cooperative budget checks made while evaluating. Any breach throws
// QueryLimitExceeded.
struct EvalLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Maximum number of rows in the final result.
  std::optional<std::size_t> max_rows;
  // Maximum number of solutions materialised for any group before solution
  // modifiers are applied.
  std::optional<std::size_t> max_intermediate_rows;
  const std::atomic<bool>* cancelled = nullptr;
};

// Evaluates a parsed query against a frozen graph.
//
// Triple patterns are joined left to right with index lookups, after moving
// the pattern with the most constant slots to the front. A FILTER runs as soon
// as every variable it mentions is bound by the joined prefix, otherwise after
// the group's OPTIONALs. OPTIONAL is a left outer join. ORDER BY, projection,
// DISTINCT, OFFSET and LIMIT are applied in that order.
SolutionSequence Evaluate(const Query& query, const store::Graph& graph,
                          const EvalLimits& limits = {});

// Evaluates an expression to a term. Returns nullopt on evaluation errors
// (unbound variable, function applied to the wrong datatype). Comparisons
// never fail: an error or incomparable pair yields false.
std::optional<rdf::Term> EvalExpression(const Expr& expr, const Binding& binding);

// Effective boolean value of a FILTER expression; errors collapse to false.
bool EvalFilter(const Expr& expr, const Binding& binding);

// Total order used by ORDER BY: unbound first, then blank nodes, IRIs and
// literals grouped by datatype; within a group by typed value, and the
// N-Triples string form breaks remaining ties.
int CompareForOrdering(const std::optional<rdf::Term>& a, const std::optional<rdf::Term>& b);

}  // namespace climakg::sparql
