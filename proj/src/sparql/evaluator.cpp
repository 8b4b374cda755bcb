#include "climakg/sparql/evaluator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "climakg/errors.hpp"

namespace climakg::sparql {

namespace {

// Variable lookup used by expression evaluation.
using Lookup = std::function<const rdf::Term*(const std::string&)>;

std::optional<rdf::Term> Eval(const Expr& e, const Lookup& lookup);

bool EffectiveBoolean(const std::optional<rdf::Term>& value) {
  if (!value || !value->is_literal()) return false;
  const rdf::Literal& lit = value->literal();
  switch (lit.type()) {
    case rdf::LiteralType::kBoolean:
      return *lit.boolean_value();
    case rdf::LiteralType::kInteger:
    case rdf::LiteralType::kDouble: {
      const double v = *lit.numeric_value();
      return v != 0 && !std::isnan(v);
    }
    case rdf::LiteralType::kString:
      return !lit.lexical().empty();
    case rdf::LiteralType::kDate:
      return false;
  }
  return false;
}

bool EvalComparison(ExprOp op, const std::optional<rdf::Term>& a,
                    const std::optional<rdf::Term>& b) {
  if (!a || !b) return false;
  const rdf::Ordering ord = rdf::CompareTerms(*a, *b);
  if (ord == rdf::Ordering::kIncomparable) {
    // Term equality still decides = / != when a non-literal is involved;
    // two literals of unrelated types are a type error.
    if (op != ExprOp::kEq && op != ExprOp::kNe) return false;
    if (a->is_literal() && b->is_literal()) return false;
    const bool same = *a == *b;
    return op == ExprOp::kEq ? same : !same;
  }
  switch (op) {
    case ExprOp::kEq:
      return ord == rdf::Ordering::kEqual;
    case ExprOp::kNe:
      return ord != rdf::Ordering::kEqual;
    case ExprOp::kLt:
      return ord == rdf::Ordering::kLess;
    case ExprOp::kLe:
      return ord != rdf::Ordering::kGreater;
    case ExprOp::kGt:
      return ord == rdf::Ordering::kGreater;
    case ExprOp::kGe:
      return ord != rdf::Ordering::kLess;
    default:
      return false;
  }
}

std::optional<rdf::Term> EvalDatePart(ExprOp op, const std::optional<rdf::Term>& arg) {
  if (!arg || !arg->is_literal()) return std::nullopt;
  const auto date = arg->literal().date_value();
  if (!date) return std::nullopt;
  long long part = 0;
  if (op == ExprOp::kYear) part = YearOf(*date);
  if (op == ExprOp::kMonth) part = MonthOf(*date);
  if (op == ExprOp::kDay) part = DayOf(*date);
  return rdf::Term(rdf::Literal::Integer(part));
}

std::optional<rdf::Term> Eval(const Expr& e, const Lookup& lookup) {
  switch (e.op) {
    case ExprOp::kConstant:
      return e.constant;
    case ExprOp::kVariable: {
      const rdf::Term* t = lookup(e.variable);
      if (!t) return std::nullopt;
      return *t;
    }
    case ExprOp::kEq:
    case ExprOp::kNe:
    case ExprOp::kLt:
    case ExprOp::kLe:
    case ExprOp::kGt:
    case ExprOp::kGe:
      return rdf::Term(rdf::Literal::Boolean(
          EvalComparison(e.op, Eval(e.args[0], lookup), Eval(e.args[1], lookup))));
    case ExprOp::kAnd:
      return rdf::Term(rdf::Literal::Boolean(EffectiveBoolean(Eval(e.args[0], lookup)) &&
                                             EffectiveBoolean(Eval(e.args[1], lookup))));
    case ExprOp::kOr:
      return rdf::Term(rdf::Literal::Boolean(EffectiveBoolean(Eval(e.args[0], lookup)) ||
                                             EffectiveBoolean(Eval(e.args[1], lookup))));
    case ExprOp::kNot:
      return rdf::Term(rdf::Literal::Boolean(!EffectiveBoolean(Eval(e.args[0], lookup))));
    case ExprOp::kYear:
    case ExprOp::kMonth:
    case ExprOp::kDay:
      return EvalDatePart(e.op, Eval(e.args[0], lookup));
    case ExprOp::kStr: {
      const auto arg = Eval(e.args[0], lookup);
      if (!arg) return std::nullopt;
      if (arg->is_iri()) return rdf::Term(rdf::Literal::String(arg->iri().str()));
      if (arg->is_literal()) return rdf::Term(rdf::Literal::String(arg->literal().lexical()));
      return std::nullopt;
    }
    case ExprOp::kBound:
      return rdf::Term(rdf::Literal::Boolean(lookup(e.variable) != nullptr));
  }
  return std::nullopt;
}

int OrderingCategory(const rdf::Term& t) {
  switch (t.kind()) {
    case rdf::TermKind::kBlankNode:
      return 1;
    case rdf::TermKind::kIri:
      return 2;
    case rdf::TermKind::kLiteral:
      break;
  }
  const rdf::Literal& lit = t.literal();
  switch (lit.type()) {
    case rdf::LiteralType::kInteger:
    case rdf::LiteralType::kDouble:
      return std::isnan(*lit.numeric_value()) ? 4 : 3;
    case rdf::LiteralType::kBoolean:
      return 5;
    case rdf::LiteralType::kDate:
      return 6;
    case rdf::LiteralType::kString:
      return lit.language().empty() ? 7 : 8;
  }
  return 9;
}

int Sign(int v) { return (v > 0) - (v < 0); }

// ---- evaluation engine ----

using Row = std::vector<const rdf::Term*>;

struct SlotRef {
  const rdf::Term* constant = nullptr;
  int variable = -1;
};

struct CompiledPattern {
  std::array<SlotRef, 3> slots;
};

struct CompiledGroup {
  std::vector<CompiledPattern> patterns;
  // filters_at[k] runs once the first k patterns are joined.
  std::vector<std::vector<const Expr*>> filters_at;
  std::vector<const Expr*> final_filters;
  std::vector<CompiledGroup> optionals;
};

class Engine {
 public:
  Engine(const Query& query, const store::Graph& graph, const EvalLimits& limits)
      : query_(query), graph_(graph), limits_(limits) {
    for (const std::string& v : query.where.Variables()) SlotOf(v);
    for (const std::string& v : query.ProjectedVariables()) SlotOf(v);
    root_ = Compile(query.where);
    for (const OrderKey& key : query.order_by) {
      for (const std::string& v : key.expr.Variables()) SlotOf(v);
    }
  }

  SolutionSequence Run() {
    std::vector<Row> rows = EvaluateGroup(root_, {Row(slot_names_.size(), nullptr)});
    SolutionSequence out;
    out.variables = query_.ProjectedVariables();

    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    if (!query_.order_by.empty()) SortRows(rows, order);

    std::vector<int> projection;
    for (const std::string& v : out.variables) projection.push_back(SlotOf(v));

    std::unordered_set<std::string> seen;
    std::size_t skipped = 0;
    const std::size_t offset = query_.offset.value_or(0);
    for (std::size_t index : order) {
      if (query_.limit && out.rows.size() >= *query_.limit) break;
      const Row& row = rows[index];
      std::vector<std::optional<rdf::Term>> projected;
      projected.reserve(projection.size());
      for (int slot : projection) {
        projected.push_back(row[slot] ? std::optional<rdf::Term>(*row[slot]) : std::nullopt);
      }
      if (query_.distinct && !seen.insert(RowKey(projected)).second) continue;
      if (skipped < offset) {
        ++skipped;
        continue;
      }
      out.rows.push_back(std::move(projected));
    }
    if (limits_.max_rows && out.rows.size() > *limits_.max_rows) {
      throw QueryLimitExceeded("result exceeds " + std::to_string(*limits_.max_rows) +
                               " rows");
    }
    return out;
  }

 private:
  int SlotOf(const std::string& name) {
    auto [it, inserted] = slots_.try_emplace(name, static_cast<int>(slot_names_.size()));
    if (inserted) slot_names_.push_back(name);
    return it->second;
  }

  static std::size_t ConstantCount(const QueryPattern& p) {
    std::size_t n = 0;
    for (const PatternSlot* s : {&p.subject, &p.predicate, &p.object}) {
      if (std::holds_alternative<rdf::Term>(*s)) ++n;
    }
    return n;
  }

  CompiledGroup Compile(const GroupPattern& group) {
    CompiledGroup out;
    // Most-bound pattern first; the rest keep their textual order.
    std::vector<const QueryPattern*> ordered;
    for (const QueryPattern& p : group.triples) ordered.push_back(&p);
    if (!ordered.empty()) {
      auto best = std::max_element(ordered.begin(), ordered.end(),
                                   [](const QueryPattern* a, const QueryPattern* b) {
                                     return ConstantCount(*a) < ConstantCount(*b);
                                   });
      std::rotate(ordered.begin(), best, best + 1);
    }

    std::vector<std::unordered_set<std::string>> bound_after(ordered.size() + 1);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const QueryPattern& p = *ordered[i];
      CompiledPattern cp;
      bound_after[i + 1] = bound_after[i];
      const PatternSlot* slots[3] = {&p.subject, &p.predicate, &p.object};
      for (int k = 0; k < 3; ++k) {
        if (const auto* v = std::get_if<Variable>(slots[k])) {
          cp.slots[k].variable = SlotOf(v->name);
          bound_after[i + 1].insert(v->name);
        } else {
          cp.slots[k].constant = &std::get<rdf::Term>(*slots[k]);
        }
      }
      out.patterns.push_back(cp);
    }

    out.filters_at.resize(ordered.size() + 1);
    for (const Expr& f : group.filters) {
      const auto vars = f.Variables();
      for (const std::string& v : vars) SlotOf(v);
      bool scheduled = false;
      for (std::size_t k = 0; k <= ordered.size() && !scheduled; ++k) {
        const bool covered = std::all_of(vars.begin(), vars.end(), [&](const std::string& v) {
          return bound_after[k].count(v) > 0;
        });
        if (covered) {
          out.filters_at[k].push_back(&f);
          scheduled = true;
        }
      }
      if (!scheduled) out.final_filters.push_back(&f);
    }
    for (const GroupPattern& opt : group.optionals) out.optionals.push_back(Compile(opt));
    return out;
  }

  void Tick() {
    if (ticks_++ % 1024 != 0) return;
    if (limits_.cancelled && limits_.cancelled->load(std::memory_order_relaxed)) {
      throw QueryLimitExceeded("query cancelled");
    }
    if (limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline) {
      throw QueryLimitExceeded("query exceeded its evaluation time limit");
    }
  }

  bool PassesFilters(const std::vector<const Expr*>& filters, const Row& row) {
    if (filters.empty()) return true;
    const Lookup lookup = [&](const std::string& name) -> const rdf::Term* {
      auto it = slots_.find(name);
      return it == slots_.end() ? nullptr : row[it->second];
    };
    for (const Expr* f : filters) {
      if (!EffectiveBoolean(Eval(*f, lookup))) return false;
    }
    return true;
  }

  void Join(const CompiledGroup& group, Row& row, std::size_t depth, std::vector<Row>& out) {
    if (depth == 0 && !PassesFilters(group.filters_at[0], row)) return;
    if (depth == group.patterns.size()) {
      out.push_back(row);
      if (limits_.max_intermediate_rows && out.size() > *limits_.max_intermediate_rows) {
        throw QueryLimitExceeded("intermediate result exceeds " +
                                 std::to_string(*limits_.max_intermediate_rows) + " rows");
      }
      return;
    }
    const CompiledPattern& cp = group.patterns[depth];
    store::TriplePattern tp;
    std::optional<rdf::Term>* targets[3] = {&tp.subject, &tp.predicate, &tp.object};
    for (int k = 0; k < 3; ++k) {
      const SlotRef& s = cp.slots[k];
      if (s.constant) {
        *targets[k] = *s.constant;
      } else if (row[s.variable]) {
        *targets[k] = *row[s.variable];
      }
    }
    graph_.ForEachMatch(tp, [&](const rdf::Term& s, const rdf::Term& p, const rdf::Term& o) {
      Tick();
      const rdf::Term* matched[3] = {&s, &p, &o};
      int newly_bound[3];
      int n_new = 0;
      bool consistent = true;
      for (int k = 0; k < 3 && consistent; ++k) {
        const int var = cp.slots[k].variable;
        if (var < 0) continue;
        if (row[var] == nullptr) {
          row[var] = matched[k];
          newly_bound[n_new++] = var;
        } else if (!(*row[var] == *matched[k])) {
          // Only reachable when a variable repeats inside one pattern.
          consistent = false;
        }
      }
      if (consistent && PassesFilters(group.filters_at[depth + 1], row)) {
        Join(group, row, depth + 1, out);
      }
      for (int i = 0; i < n_new; ++i) row[newly_bound[i]] = nullptr;
      return true;
    });
  }

  std::vector<Row> EvaluateGroup(const CompiledGroup& group, const std::vector<Row>& input) {
    std::vector<Row> rows;
    for (const Row& in : input) {
      Row scratch = in;
      Join(group, scratch, 0, rows);
    }
    for (const CompiledGroup& opt : group.optionals) {
      std::vector<Row> next;
      for (Row& row : rows) {
        std::vector<Row> extended = EvaluateGroup(opt, {row});
        if (extended.empty()) {
          next.push_back(std::move(row));
        } else {
          for (Row& e : extended) next.push_back(std::move(e));
        }
        if (limits_.max_intermediate_rows && next.size() > *limits_.max_intermediate_rows) {
          throw QueryLimitExceeded("intermediate result exceeds " +
                                   std::to_string(*limits_.max_intermediate_rows) + " rows");
        }
      }
      rows = std::move(next);
    }
    if (!group.final_filters.empty()) {
      std::vector<Row> kept;
      for (Row& row : rows) {
        if (PassesFilters(group.final_filters, row)) kept.push_back(std::move(row));
      }
      rows = std::move(kept);
    }
    return rows;
  }

  void SortRows(const std::vector<Row>& rows, std::vector<std::size_t>& order) {
    std::vector<std::vector<std::optional<rdf::Term>>> keys(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& row = rows[i];
      const Lookup lookup = [&](const std::string& name) -> const rdf::Term* {
        auto it = slots_.find(name);
        return it == slots_.end() ? nullptr : row[it->second];
      };
      for (const OrderKey& key : query_.order_by) keys[i].push_back(Eval(key.expr, lookup));
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      for (std::size_t k = 0; k < query_.order_by.size(); ++k) {
        int c = CompareForOrdering(keys[a][k], keys[b][k]);
        if (!query_.order_by[k].ascending) c = -c;
        if (c != 0) return c < 0;
      }
      return false;
    });
  }

  static std::string RowKey(const std::vector<std::optional<rdf::Term>>& row) {
    std::string key;
    for (const auto& t : row) {
      key += t ? t->ToNTriples() : std::string("\x01");
      key += '\x1f';
    }
    return key;
  }

  const Query& query_;
  const store::Graph& graph_;
  const EvalLimits& limits_;
  std::unordered_map<std::string, int> slots_;
  std::vector<std::string> slot_names_;
  CompiledGroup root_;
  std::size_t ticks_ = 0;
};

}  // namespace

Binding SolutionSequence::RowBinding(std::size_t row) const {
  Binding b;
  for (std::size_t j = 0; j < variables.size(); ++j) {
    if (rows[row][j]) b.emplace(variables[j], *rows[row][j]);
  }
  return b;
}

SolutionSequence Evaluate(const Query& query, const store::Graph& graph,
                          const EvalLimits& limits) {
  return Engine(query, graph, limits).Run();
}

std::optional<rdf::Term> EvalExpression(const Expr& expr, const Binding& binding) {
  return Eval(expr, [&binding](const std::string& name) -> const rdf::Term* {
    auto it = binding.find(name);
    return it == binding.end() ? nullptr : &it->second;
  });
}

bool EvalFilter(const Expr& expr, const Binding& binding) {
  return EffectiveBoolean(EvalExpression(expr, binding));
}

int CompareForOrdering(const std::optional<rdf::Term>& a, const std::optional<rdf::Term>& b) {
  if (!a || !b) return static_cast<int>(a.has_value()) - static_cast<int>(b.has_value());
  const int ca = OrderingCategory(*a);
  const int cb = OrderingCategory(*b);
  if (ca != cb) return ca < cb ? -1 : 1;
  if (ca == 8) {
    const int c = a->literal().language().compare(b->literal().language());
    if (c != 0) return Sign(c);
  } else if (ca != 1 && ca != 2 && ca != 4) {
    switch (rdf::CompareTerms(*a, *b)) {
      case rdf::Ordering::kLess:
        return -1;
      case rdf::Ordering::kGreater:
        return 1;
      default:
        break;
    }
  }
  return Sign(a->ToNTriples().compare(b->ToNTriples()));
}

}  // namespace climakg::sparql
