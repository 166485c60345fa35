#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "hforest/qorder.hpp"
#include "hforest/term.hpp"

namespace hforest {

/// Decision procedure for the homomorphism quasiorder <=_h on terms over a
/// fixed Q. Results are memoized per ordered pair of term ids; the memo is
/// a coherent cache guarded by a mutex, so one context may be shared across
/// threads (racing queries duplicate work but agree).
class HContext {
public:
  explicit HContext(const QOrder& q, bool memoize = true) : q_(&q), memoize_(memoize) {}

  /// T <=_h S.
  bool leq(Term t, Term s);
  /// Mutual <=_h.
  bool equiv(Term t, Term s) { return leq(t, s) && leq(s, t); }
  /// True iff f is h-equivalent to a tree term: f is a tree, or a forest
  /// dominated by one of its own children. The empty forest is not.
  bool join_irreducible(Term f);

  const QOrder& order() const { return *q_; }

private:
  bool rec(Term t, Term s, std::size_t fuel);

  const QOrder* q_;
  bool memoize_;
  std::mutex mu_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

/// One-shot conveniences (fresh context per call).
bool leq_h(const QOrder& q, Term t, Term s);
bool equiv_h(const QOrder& q, Term t, Term s);
bool is_join_irreducible(const QOrder& q, Term f);

}  // namespace hforest
