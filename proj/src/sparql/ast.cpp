#include "climakg/sparql/ast.hpp"

#include <algorithm>

namespace climakg::sparql {

namespace {

void AddUnique(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}

void CollectExprVariables(const Expr& e, std::vector<std::string>& out) {
  if (e.op == ExprOp::kVariable || e.op == ExprOp::kBound) AddUnique(out, e.variable);
  for (const Expr& arg : e.args) CollectExprVariables(arg, out);
}

void CollectPatternVariables(const GroupPattern& g, std::vector<std::string>& out) {
  for (const QueryPattern& p : g.triples) {
    for (const PatternSlot* slot : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<Variable>(slot)) AddUnique(out, v->name);
    }
  }
  for (const GroupPattern& opt : g.optionals) CollectPatternVariables(opt, out);
}

}  // namespace

Expr Expr::Constant(rdf::Term term) {
  Expr e;
  e.op = ExprOp::kConstant;
  e.constant = std::move(term);
  return e;
}

Expr Expr::Var(std::string name) {
  Expr e;
  e.op = ExprOp::kVariable;
  e.variable = std::move(name);
  return e;
}

Expr Expr::Call(ExprOp op, std::vector<Expr> args) {
  Expr e;
  e.op = op;
  e.args = std::move(args);
  return e;
}

std::vector<std::string> Expr::Variables() const {
  std::vector<std::string> out;
  CollectExprVariables(*this, out);
  return out;
}

std::vector<std::string> GroupPattern::Variables() const {
  std::vector<std::string> out;
  CollectPatternVariables(*this, out);
  return out;
}

std::vector<std::string> Query::ProjectedVariables() const {
  return select_all ? where.Variables() : select;
}

}  // namespace climakg::sparql
