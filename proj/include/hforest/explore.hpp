#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hforest/hcalc.hpp"
#include "hforest/ordinal.hpp"
#include "hforest/qorder.hpp"
#include "hforest/term.hpp"

namespace hforest {

struct EnumOptions {
  Ordinal level;                    // xi
  std::size_t max_nodes = 4;
  std::size_t max_branch = 2;
  Ordinal index_cap;                // bound on section indices (default 0)
  std::size_t max_terms = 1000000;  // hard cap; exceeding it throws
};

/// All canonical terms t with in_level(t, level), node_count <= max_nodes,
/// forest arity <= max_branch and section indices <= index_cap, in
/// syntactic order. Section indices are drawn from a fixed ladder of
/// ordinals (naturals up to 4, w, w+1, w+2, w*2, w^2, w^2+1, w^2*2, w^3)
/// clipped to index_cap. Throws validation_error when the output would
/// exceed max_terms.
std::vector<Term> enumerate_terms(const QOrder& q, const EnumOptions& opt);

/// The relation a quotient is taken by: plain <=_h or the induced <=_h^xi.
class TermRelation {
public:
  static TermRelation h() { return TermRelation{Ordinal(), false}; }
  static TermRelation h_xi(Ordinal xi) { return TermRelation{std::move(xi), true}; }

  bool leq(HContext& ctx, Term t, Term s) const;
  bool is_induced() const { return induced_; }
  const Ordinal& xi() const { return xi_; }

private:
  TermRelation(Ordinal xi, bool induced) : xi_(std::move(xi)), induced_(induced) {}
  Ordinal xi_;
  bool induced_;
};

/// A quotient poset of terms: equivalence classes with the strict order
/// between them and its covering (Hasse) relation.
struct DegreePoset {
  /// Each class sorted syntactically; front() is the representative.
  /// Classes are ordered by representative.
  std::vector<std::vector<Term>> classes;
  /// strict[i][j]: class i strictly below class j.
  std::vector<std::vector<bool>> strict;
  /// Covering pairs (lower, upper), sorted; transitive closure == strict.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

/// Quotients pairwise-distinct terms by mutual relation. Deterministic:
/// depends only on the input set and the relation.
DegreePoset quotient(const QOrder& q, std::span<const Term> terms, const TermRelation& rel);

/// DOT digraph: one node per class labeled by its representative, one edge
/// lower -> upper per covering pair. Byte-deterministic.
std::string hasse_dot(const DegreePoset& p);

/// Flat report: one line per class, `<index> <representative> covers: <indices>`.
std::string poset_report(const DegreePoset& p);

}  // namespace hforest
