#include "hforest/transforms.hpp"

#include <vector>

namespace hforest {

Term apply_s(const Ordinal& alpha, Term t) {
  if (t.is_tree()) return make_sapp(alpha, t);
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (Term c : t.children()) kids.push_back(make_sapp(alpha, c));
  return make_forest(kids);
}

Term apply_s_star(const Ordinal& xi, Term t) {
  if (xi.is_zero()) return t;
  std::vector<Ordinal> exps = xi.summands();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) t = apply_s(*it, t);
  return t;
}

namespace {

// Components of a term read as a forest: a tree is its own only component.
void append_components(Term t, std::vector<Term>& out) {
  if (t.is_tree()) {
    out.push_back(t);
  } else {
    for (Term c : t.children()) out.push_back(c);
  }
}

}  // namespace

Term apply_r(const Ordinal& alpha, Term t) {
  switch (t.kind()) {
    case TermKind::label:
      return t;
    case TermKind::forest: {
      std::vector<Term> kids;
      for (Term c : t.children()) append_components(apply_r(alpha, c), kids);
      return make_forest(kids);
    }
    case TermKind::dot: {
      std::vector<Term> kids;
      append_components(apply_r(alpha, t.head()), kids);
      append_components(apply_r(alpha, t.tail()), kids);
      return make_forest(kids);
    }
    case TermKind::sapp: {
      auto c = alpha <=> t.index();
      if (c > 0) return apply_r(alpha, t.body());
      if (c == 0) return t.body();
      return t;
    }
  }
  return t;  // unreachable
}

Term apply_r_star(const Ordinal& xi, Term t) {
  if (xi.is_zero()) return t;
  for (const Ordinal& alpha : xi.summands()) t = apply_r(alpha, t);
  return t;
}

bool leq_h_xi(const Ordinal& xi, HContext& ctx, Term t, Term s) {
  return ctx.leq(apply_r_star(xi, t), apply_r_star(xi, s));
}

bool leq_h_xi(const Ordinal& xi, const QOrder& q, Term t, Term s) {
  HContext ctx(q);
  return leq_h_xi(xi, ctx, t, s);
}

}  // namespace hforest
