#include "hforest/oracle.hpp"

#include <cstdint>

#include "hforest/error.hpp"

namespace hforest {

namespace {

// The label behind a level-1 singleton: q itself, or the q inside s{0}(q).
const std::string& constant_label(Term t) {
  if (t.kind() == TermKind::label) return t.label();
  if (t.kind() == TermKind::sapp && t.index().is_zero() && t.body().kind() == TermKind::label)
    return t.body().label();
  throw validation_error("non-constant section application in a level-1 term: " + print_term(t));
}

void build(Term t, int parent, LabeledForest& out) {
  switch (t.kind()) {
    case TermKind::label:
    case TermKind::sapp: {
      const int node = static_cast<int>(out.nodes.size());
      out.nodes.push_back({constant_label(t), parent, {}});
      if (parent < 0)
        out.roots.push_back(node);
      else
        out.nodes[parent].children.push_back(node);
      return;
    }
    case TermKind::dot: {
      const int node = static_cast<int>(out.nodes.size());
      out.nodes.push_back({constant_label(t.head()), parent, {}});
      if (parent < 0)
        out.roots.push_back(node);
      else
        out.nodes[parent].children.push_back(node);
      for (Term c : t.tail().children()) build(c, node, out);
      return;
    }
    case TermKind::forest:
      for (Term c : t.children()) build(c, parent, out);
      return;
  }
}

}  // namespace

LabeledForest to_labeled_forest(Term t) {
  if (!in_level(t, Ordinal::nat(1)))
    throw validation_error("term is not in level 1: " + print_term(t));
  LabeledForest out;
  build(t, -1, out);
  return out;
}

namespace {

// Memoized: can the subtree of f at x map monotonically into the subtree
// of g at v with x |-> v?
struct HomSearch {
  const QOrder& q;
  const LabeledForest& f;
  const LabeledForest& g;
  std::vector<std::size_t> flabel, glabel;
  std::vector<std::vector<int>> gdesc;  // v plus all its proper descendants
  std::vector<std::int8_t> memo;        // -1 unknown, 0 no, 1 yes

  HomSearch(const QOrder& q, const LabeledForest& f, const LabeledForest& g)
      : q(q), f(f), g(g), memo(f.nodes.size() * g.nodes.size(), -1) {
    for (const auto& n : f.nodes) flabel.push_back(q.index(n.label));
    for (const auto& n : g.nodes) glabel.push_back(q.index(n.label));
    gdesc.resize(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) collect(static_cast<int>(v), gdesc[v]);
  }

  void collect(int v, std::vector<int>& out) {
    out.push_back(v);
    for (int c : g.nodes[v].children) collect(c, out);
  }

  bool tree_hom(int x, int v) {
    std::int8_t& slot = memo[static_cast<std::size_t>(x) * g.nodes.size() + v];
    if (slot >= 0) return slot != 0;
    bool ok = q.leq(flabel[x], glabel[v]);
    if (ok) {
      for (int c : f.nodes[x].children) {
        bool found = false;
        for (int u : gdesc[v])
          if (tree_hom(c, u)) {
            found = true;
            break;
          }
        if (!found) {
          ok = false;
          break;
        }
      }
    }
    slot = ok ? 1 : 0;
    return ok;
  }
};

}  // namespace

bool hom_leq(const QOrder& q, const LabeledForest& f, const LabeledForest& g) {
  if (f.roots.empty()) return true;
  if (g.roots.empty()) return false;
  HomSearch search(q, f, g);
  for (int r : f.roots) {
    bool found = false;
    for (std::size_t v = 0; v < g.nodes.size() && !found; ++v)
      found = search.tree_hom(r, static_cast<int>(v));
    if (!found) return false;
  }
  return true;
}

}  // namespace hforest
