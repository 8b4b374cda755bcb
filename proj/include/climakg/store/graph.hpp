#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "climakg/rdf/term.hpp"

namespace climakg::store {

// A triple pattern; an empty slot is a wildcard.
struct TriplePattern {
  std::optional<rdf::Term> subject;
  std::optional<rdf::Term> predicate;
  std::optional<rdf::Term> object;
};

bool Unifies(const TriplePattern& pattern, const rdf::Triple& triple);

// In-memory triple set. Terms are interned into dense ids and every triple is
// kept in three sorted permutations (SPO, POS, OSP) so that any combination of
// bound slots is a key prefix of one of them.
//
// Build single-threaded, then Freeze(); a frozen graph is read-only and may be
// matched from any number of threads at once.
class Graph {
 public:
  // Called for each match; return false to stop the scan early.
  using Visitor =
      std::function<bool(const rdf::Term& s, const rdf::Term& p, const rdf::Term& o)>;

  // Returns true iff the triple was not yet present. Throws FrozenGraphError
  // once the graph has been frozen.
  bool Insert(const rdf::Triple& triple);

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }
  bool Contains(const rdf::Triple& triple) const;

  std::vector<rdf::Triple> Match(const TriplePattern& pattern) const;
  void ForEachMatch(const TriplePattern& pattern, const Visitor& visit) const;

  // All triples in index order.
  std::vector<rdf::Triple> Triples() const;

  void Freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  // Cardinalities of the SPO, POS and OSP indexes; all equal size().
  std::array<std::size_t, 3> IndexSizes() const {
    return {spo_.size(), pos_.size(), osp_.size()};
  }
  std::size_t distinct_terms() const { return terms_.size(); }

  // Set equality over triples, independent of insertion order.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  using Id = std::uint32_t;
  using Key = std::array<Id, 3>;

  std::optional<Id> Lookup(const rdf::Term& term) const;
  Id Intern(const rdf::Term& term);

  std::unordered_map<rdf::Term, Id, rdf::TermHash> ids_;
  std::deque<rdf::Term> terms_;
  std::set<Key> spo_;
  std::set<Key> pos_;
  std::set<Key> osp_;
  bool frozen_ = false;
};

}  // namespace climakg::store
