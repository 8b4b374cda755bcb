#include "climakg/store/graph.hpp"

#include <limits>

#include "climakg/errors.hpp"

namespace climakg::store {

namespace {

bool SlotMatches(const std::optional<rdf::Term>& slot, const rdf::Term& term) {
  return !slot || *slot == term;
}

}  // namespace

bool Unifies(const TriplePattern& pattern, const rdf::Triple& triple) {
  return SlotMatches(pattern.subject, triple.subject) &&
         SlotMatches(pattern.predicate, triple.predicate) &&
         SlotMatches(pattern.object, triple.object);
}

std::optional<Graph::Id> Graph::Lookup(const rdf::Term& term) const {
  auto it = ids_.find(term);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Graph::Id Graph::Intern(const rdf::Term& term) {
  auto [it, inserted] = ids_.try_emplace(term, static_cast<Id>(terms_.size()));
  if (inserted) {
    if (terms_.size() == std::numeric_limits<Id>::max()) {
      throw Error("term dictionary exhausted");
    }
    terms_.push_back(term);
  }
  return it->second;
}

bool Graph::Insert(const rdf::Triple& triple) {
  if (frozen_) throw FrozenGraphError("insert into a frozen graph");
  const Id s = Intern(triple.subject);
  const Id p = Intern(triple.predicate);
  const Id o = Intern(triple.object);
  if (!spo_.insert({s, p, o}).second) return false;
  pos_.insert({p, o, s});
  osp_.insert({o, s, p});
  return true;
}

bool Graph::Contains(const rdf::Triple& triple) const {
  const auto s = Lookup(triple.subject);
  const auto p = Lookup(triple.predicate);
  const auto o = Lookup(triple.object);
  return s && p && o && spo_.count({*s, *p, *o}) > 0;
}

void Graph::ForEachMatch(const TriplePattern& pattern, const Visitor& visit) const {
  std::optional<Id> s, p, o;
  // A bound slot whose term was never interned cannot match anything.
  if (pattern.subject && !(s = Lookup(*pattern.subject))) return;
  if (pattern.predicate && !(p = Lookup(*pattern.predicate))) return;
  if (pattern.object && !(o = Lookup(*pattern.object))) return;

  // Pick the permutation whose key prefix covers the bound slots, then walk
  // the range [prefix.., prefix+1) with the remaining slots as wildcards.
  const std::set<Key>* index = &spo_;
  std::array<std::optional<Id>, 3> key{s, p, o};
  enum class Order { kSpo, kPos, kOsp } order = Order::kSpo;
  if (s && !p && o) {
    index = &osp_;
    key = {o, s, p};
    order = Order::kOsp;
  } else if (!s && p) {
    index = &pos_;
    key = {p, o, s};
    order = Order::kPos;
  } else if (!s && !p && o) {
    index = &osp_;
    key = {o, s, p};
    order = Order::kOsp;
  }

  Key low{0, 0, 0};
  std::size_t bound = 0;
  while (bound < 3 && key[bound]) {
    low[bound] = *key[bound];
    ++bound;
  }
  for (auto it = index->lower_bound(low); it != index->end(); ++it) {
    const Key& k = *it;
    bool in_range = true;
    for (std::size_t i = 0; i < bound; ++i) {
      if (k[i] != low[i]) {
        in_range = false;
        break;
      }
    }
    if (!in_range) break;
    Key spo = k;
    if (order == Order::kPos) spo = {k[2], k[0], k[1]};
    if (order == Order::kOsp) spo = {k[1], k[2], k[0]};
    if (!visit(terms_[spo[0]], terms_[spo[1]], terms_[spo[2]])) return;
  }
}

std::vector<rdf::Triple> Graph::Match(const TriplePattern& pattern) const {
  std::vector<rdf::Triple> out;
  ForEachMatch(pattern, [&out](const rdf::Term& s, const rdf::Term& p, const rdf::Term& o) {
    out.emplace_back(s, p, o);
    return true;
  });
  return out;
}

std::vector<rdf::Triple> Graph::Triples() const { return Match(TriplePattern{}); }

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (const rdf::Triple& t : a.Triples()) {
    if (!b.Contains(t)) return false;
  }
  return true;
}

}  // namespace climakg::store
