#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "climakg/rdf/term.hpp"

namespace climakg::sparql {

struct Variable {
  std::string name;  // without the '?' / '$' sigil

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternSlot = std::variant<rdf::Term, Variable>;

struct QueryPattern {
  PatternSlot subject;
  PatternSlot predicate;
  PatternSlot object;
};

enum class ExprOp {
  kConstant,
  kVariable,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAnd,
  kOr,
  kNot,
  kYear,
  kMonth,
  kDay,
  kStr,
  kBound,
};

// Expression tree for FILTER and ORDER BY keys. Value type; children are held
// by value.
struct Expr {
  ExprOp op = ExprOp::kConstant;
  std::optional<rdf::Term> constant;  // kConstant
  std::string variable;               // kVariable, kBound
  std::vector<Expr> args;

  static Expr Constant(rdf::Term term);
  static Expr Var(std::string name);
  static Expr Call(ExprOp op, std::vector<Expr> args);

  // Variables referenced anywhere in the tree, in first-seen order.
  std::vector<std::string> Variables() const;
};

struct GroupPattern {
  std::vector<QueryPattern> triples;
  std::vector<Expr> filters;
  std::vector<GroupPattern> optionals;

  // All variables mentioned by triple patterns here and in nested optionals,
  // in first-seen order.
  std::vector<std::string> Variables() const;
};

struct OrderKey {
  Expr expr;
  bool ascending = true;
};

struct Query {
  std::map<std::string, std::string> prefixes;
  bool select_all = false;
  std::vector<std::string> select;  // projected variable names
  bool distinct = false;
  GroupPattern where;
  std::vector<OrderKey> order_by;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> offset;

  // The variables that appear in results: the select list, or all pattern
  // variables for SELECT *.
  std::vector<std::string> ProjectedVariables() const;
};

}  // namespace climakg::sparql
