#pragma once

#include <string>
#include <vector>

#include "hforest/qorder.hpp"
#include "hforest/term.hpp"

namespace hforest {

/// A concrete finite Q-labeled forest: the denotation of a level-1 term.
/// Used by the brute-force homomorphism oracle, independently of the
/// recursive rules on terms.
struct LabeledForest {
  struct Node {
    std::string label;
    int parent = -1;  // -1 for roots
    std::vector<int> children;
  };

  std::vector<Node> nodes;
  std::vector<int> roots;
};

/// Converts a level-1 term to its labeled forest. Constant wrappers s{0}(q)
/// read as the label q; any other section application, or a term outside
/// level 1, throws validation_error.
LabeledForest to_labeled_forest(Term t);

/// True iff there is a monotone map phi from the nodes of f to the nodes of
/// g (x ancestor-or-equal of y implies phi(x) ancestor-or-equal of phi(y))
/// with label(x) <=_Q label(phi(x)) for every x. Each component of f lands
/// inside a single component of g; phi need not be injective. Decided by
/// memoized search over node assignments.
bool hom_leq(const QOrder& q, const LabeledForest& f, const LabeledForest& g);

}  // namespace hforest
