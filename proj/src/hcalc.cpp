#include "hforest/hcalc.hpp"

#include <stdexcept>

namespace hforest {

namespace {

std::uint64_t pair_key(Term t, Term s) {
  return (static_cast<std::uint64_t>(t.id()) << 32) | s.id();
}

}  // namespace

bool HContext::leq(Term t, Term s) {
  if (!t.valid() || !s.valid()) throw std::invalid_argument("leq on an invalid term");
  return rec(t, s, t.node_count() + s.node_count());
}

// Structural recursion on the pair; every recursive call strictly decreases
// node_count(t) + node_count(s), which `fuel` asserts.
bool HContext::rec(Term t, Term s, std::size_t fuel) {
  const std::size_t sum = t.node_count() + s.node_count();
  if (sum > fuel) throw std::logic_error("leq_h recursion failed to decrease");

  const std::uint64_t key = pair_key(t, s);
  if (memoize_) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  bool result;
  if (t.is_forest()) {
    // Forest on the left: every component below s (vacuous for the empty
    // forest, which is below everything).
    result = true;
    for (Term c : t.children())
      if (!rec(c, s, sum - 1)) {
        result = false;
        break;
      }
  } else if (s.is_forest()) {
    // Tree vs forest: below some component; a tree is never below the
    // empty forest.
    result = false;
    for (Term d : s.children())
      if (rec(t, d, sum - 1)) {
        result = true;
        break;
      }
  } else if (t.kind() == TermKind::label && s.kind() == TermKind::label) {
    result = q_->leq(t.label(), s.label());
  } else if (t.kind() == TermKind::label && s.kind() == TermKind::sapp) {
    // p == s_b(p), and s_b(p) <= s_b(V) iff p <= V.
    result = rec(t, s.body(), sum - 1);
  } else if (t.kind() == TermKind::sapp && s.kind() == TermKind::label) {
    result = rec(t.body(), s, sum - 1);
  } else if (t.kind() == TermKind::sapp && s.kind() == TermKind::sapp) {
    auto c = t.index() <=> s.index();
    if (c == 0)
      result = rec(t.body(), s.body(), sum - 2);
    else if (c > 0)
      result = rec(t, s.body(), sum - 1);
    else
      result = rec(t.body(), s, sum - 1);
  } else {
    // At least one side is a dot; read singletons as X.[].
    // A.B <= C.D  iff  (A <= C and B <= C.D) or (A !<= C and A.B <= D).
    const bool t_dot = t.kind() == TermKind::dot;
    const bool s_dot = s.kind() == TermKind::dot;
    Term a = t_dot ? t.head() : t;
    Term c = s_dot ? s.head() : s;
    if (rec(a, c, sum - 1))
      result = t_dot ? rec(t.tail(), s, sum - 1) : true;
    else
      result = s_dot ? rec(t, s.tail(), sum - 1) : false;
  }

  if (memoize_) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, result);
  }
  return result;
}

bool HContext::join_irreducible(Term f) {
  if (!f.valid()) throw std::invalid_argument("join_irreducible on an invalid term");
  if (f.is_tree()) return true;
  for (Term c : f.children())
    if (leq(f, c)) return true;
  return false;
}

bool leq_h(const QOrder& q, Term t, Term s) { return HContext(q).leq(t, s); }
bool equiv_h(const QOrder& q, Term t, Term s) { return HContext(q).equiv(t, s); }
bool is_join_irreducible(const QOrder& q, Term f) { return HContext(q).join_irreducible(f); }

}  // namespace hforest
