#include "hforest/explore.hpp"

#include <algorithm>

#include "hforest/error.hpp"
#include "hforest/transforms.hpp"

namespace hforest {

namespace {

std::vector<Ordinal> index_ladder(const Ordinal& cap) {
  std::vector<Ordinal> pool;
  auto add = [&](Ordinal o) {
    if (o <= cap) pool.push_back(std::move(o));
  };
  for (std::uint64_t n = 0; n <= 4; ++n) add(Ordinal::nat(n));
  const Ordinal w = Ordinal::omega();
  add(w);
  add(w + Ordinal::nat(1));
  add(w + Ordinal::nat(2));
  add(Ordinal::omega_pow(Ordinal::nat(1), 2));
  const Ordinal w2 = Ordinal::omega_pow(Ordinal::nat(2));
  add(w2);
  add(w2 + Ordinal::nat(1));
  add(Ordinal::omega_pow(Ordinal::nat(2), 2));
  add(Ordinal::omega_pow(Ordinal::nat(3)));
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

struct Generator {
  const QOrder& q;
  const EnumOptions& opt;
  std::vector<Ordinal> pool;

  // All trees of size <= current step, kept in syntactic order, and the
  // same trees bucketed by size.
  std::vector<Term> all_trees;
  std::vector<std::vector<Term>> trees_by_size;    // [n]
  std::vector<std::vector<Term>> forests_by_size;  // [n]
  std::size_t generated = 0;

  explicit Generator(const QOrder& q, const EnumOptions& opt)
      : q(q), opt(opt), pool(index_ladder(opt.index_cap)) {}

  void bump() {
    if (++generated > opt.max_terms)
      throw validation_error("enumeration exceeded the term cap (" +
                             std::to_string(opt.max_terms) + ")");
  }

  // Strictly increasing subsets of all_trees with total size `target` and
  // at most max_branch elements.
  void forests_of_size(std::size_t target, std::vector<Term>& chosen, std::size_t from,
                       std::vector<Term>& out) {
    if (target == 0) {
      out.push_back(make_forest(chosen));
      bump();
      return;
    }
    if (chosen.size() == opt.max_branch) return;
    for (std::size_t i = from; i < all_trees.size(); ++i) {
      const std::size_t sz = all_trees[i].node_count();
      if (sz > target) continue;
      chosen.push_back(all_trees[i]);
      forests_of_size(target - sz, chosen, i + 1, out);
      chosen.pop_back();
    }
  }

  void run() {
    const std::size_t N = opt.max_nodes;
    trees_by_size.assign(N + 1, {});
    forests_by_size.assign(N + 1, {});

    std::vector<std::string> names = q.labels();
    std::sort(names.begin(), names.end());
    for (const std::string& name : names) {
      trees_by_size[1].push_back(make_label(name));
      bump();
    }
    all_trees = trees_by_size[1];
    forests_by_size[1].push_back(empty_forest());
    bump();

    for (std::size_t n = 2; n <= N; ++n) {
      // Section applications over smaller trees.
      for (const Ordinal& alpha : pool)
        for (Term body : trees_by_size[n - 1]) {
          trees_by_size[n].push_back(make_sapp(alpha, body));
          bump();
        }
      // Dots: singleton head of size h, forest tail of size n-1-h.
      for (std::size_t h = 1; h + 2 <= n; ++h)
        for (Term head : trees_by_size[h]) {
          if (!head.is_singleton()) continue;
          for (Term tail : forests_by_size[n - 1 - h]) {
            trees_by_size[n].push_back(make_dot(head, tail));
            bump();
          }
        }
      for (Term t : trees_by_size[n]) all_trees.push_back(t);
      std::sort(all_trees.begin(), all_trees.end(),
                [](Term a, Term b) { return syntactic_compare(a, b) < 0; });
      std::vector<Term> chosen;
      forests_of_size(n - 1, chosen, 0, forests_by_size[n]);
    }
  }
};

}  // namespace

std::vector<Term> enumerate_terms(const QOrder& q, const EnumOptions& opt) {
  if (opt.max_nodes < 1) throw validation_error("max_nodes must be at least 1");
  Generator gen(q, opt);
  gen.run();

  std::vector<Term> out;
  for (std::size_t n = 1; n <= opt.max_nodes; ++n) {
    for (Term t : gen.trees_by_size[n])
      if (in_level(t, opt.level)) out.push_back(t);
    for (Term t : gen.forests_by_size[n])
      if (in_level(t, opt.level)) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](Term a, Term b) { return syntactic_compare(a, b) < 0; });
  return out;
}

bool TermRelation::leq(HContext& ctx, Term t, Term s) const {
  if (!induced_) return ctx.leq(t, s);
  return leq_h_xi(xi_, ctx, t, s);
}

DegreePoset quotient(const QOrder& q, std::span<const Term> terms, const TermRelation& rel) {
  const std::size_t n = terms.size();
  HContext ctx(q);
  std::vector<Term> keys(terms.begin(), terms.end());
  if (rel.is_induced())
    for (Term& t : keys) t = apply_r_star(rel.xi(), t);
  std::vector<bool> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq[i * n + j] = ctx.leq(keys[i], keys[j]);

  // Group by mutual relation against one member per class.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& g : groups) {
      const std::size_t rep = g.front();
      if (leq[i * n + rep] && leq[rep * n + i]) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }

  DegreePoset p;
  const auto term_less = [](Term a, Term b) { return syntactic_compare(a, b) < 0; };
  std::vector<std::size_t> group_rep;  // index into `terms` of each class representative
  for (auto& g : groups) {
    std::vector<Term> members;
    for (std::size_t i : g) members.push_back(terms[i]);
    std::sort(members.begin(), members.end(), term_less);
    p.classes.push_back(std::move(members));
    group_rep.push_back(g.front());
  }
  std::vector<std::size_t> order(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return term_less(p.classes[a].front(), p.classes[b].front());
  });
  std::vector<std::vector<Term>> classes;
  std::vector<std::size_t> reps;
  for (std::size_t i : order) {
    classes.push_back(std::move(p.classes[i]));
    reps.push_back(group_rep[i]);
  }
  p.classes = std::move(classes);

  const std::size_t k = p.classes.size();
  p.strict.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j)
        p.strict[i][j] = leq[reps[i] * n + reps[j]] && !leq[reps[j] * n + reps[i]];

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!p.strict[i][j]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < k && covered; ++m)
        if (p.strict[i][m] && p.strict[m][j]) covered = false;
      if (covered) p.hasse.emplace_back(i, j);
    }
  std::sort(p.hasse.begin(), p.hasse.end());
  return p;
}

std::string hasse_dot(const DegreePoset& p) {
  std::string out = "digraph degrees {\n";
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    out += "  c" + std::to_string(i) + " [label=\"" + print_term(p.classes[i].front()) + "\"];\n";
  }
  for (const auto& [lo, hi] : p.hasse)
    out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

std::string poset_report(const DegreePoset& p) {
  std::string out;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    out += std::to_string(i) + " " + print_term(p.classes[i].front()) + " covers:";
    for (const auto& [lo, hi] : p.hasse)
      if (hi == i) out += " " + std::to_string(lo);
    out += "\n";
  }
  return out;
}

}  // namespace hforest
