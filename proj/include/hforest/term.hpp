#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hforest/ordinal.hpp"

namespace hforest {

class QOrder;
class Term;

enum class TermKind : std::uint8_t { label, sapp, dot, forest };

namespace detail {

struct TermNode {
  TermKind kind;
  std::uint32_t id;
  std::uint32_t count;  // AST node count
  std::string label;    // kind == label
  Ordinal index;        // kind == sapp
  const TermNode* head = nullptr;  // sapp body / dot head
  const TermNode* tail = nullptr;  // dot tail
  std::vector<Term> children;      // kind == forest
};

}  // namespace detail

/// A term of the iterated labeled-forest calculus: a constant label, a
/// section application s_a(T), a tree S.F, or a finite forest [T_1,...,T_k].
///
/// Terms are hash-consed handles into a process-wide interning store:
/// structurally equal terms share one node, so operator== and id() decide
/// structural equality in O(1). Terms are immutable; the store is
/// append-only and lock-protected, so terms may be built and shared across
/// threads.
class Term {
public:
  Term() = default;

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const { return node_->kind; }
  std::uint32_t id() const { return node_->id; }
  std::size_t node_count() const { return node_->count; }

  bool is_singleton() const { return kind() == TermKind::label || kind() == TermKind::sapp; }
  bool is_tree() const { return kind() != TermKind::forest; }
  bool is_forest() const { return kind() == TermKind::forest; }

  /// Label name; only for label nodes.
  const std::string& label() const { return node_->label; }
  /// Section index; only for sapp nodes.
  const Ordinal& index() const { return node_->index; }
  /// Body of a sapp node.
  Term body() const { return Term(node_->head); }
  /// Head (singleton) of a dot node.
  Term head() const { return Term(node_->head); }
  /// Tail (forest) of a dot node.
  Term tail() const { return Term(node_->tail); }
  /// Children of a forest node.
  std::span<const Term> children() const;

  bool operator==(const Term& other) const { return node_ == other.node_; }

private:
  friend class TermStore;
  explicit Term(const detail::TermNode* node) : node_(node) {}
  const detail::TermNode* node_ = nullptr;
};

inline std::span<const Term> Term::children() const { return node_->children; }

/// Constructors intern into the global store and enforce the kind
/// discipline (dot heads are singletons, dot tails are forests, sapp bodies
/// and forest children are trees); violations throw std::invalid_argument.
Term make_label(std::string_view name);
Term make_sapp(const Ordinal& index, Term body);
Term make_dot(Term head, Term tail);
Term make_forest(std::span<const Term> children);
Term make_forest(std::initializer_list<Term> children);
Term empty_forest();

/// Fixed total syntactic order: kind tag (label < sapp < dot < forest),
/// then ordinal index / label name, then recursively.
std::strong_ordering syntactic_compare(Term a, Term b);

/// Sorts forest children by the syntactic order and removes structurally
/// identical duplicates, recursively. Idempotent and h-equivalence
/// preserving.
Term canonicalize(Term t);

/// Decides membership of t in the level-xi term class by structural
/// recursion on t and the CNF of xi.
bool in_level(Term t, const Ordinal& xi);

/// Parses the ASCII term grammar over the labels of q:
///   forest    := "[" "]" | "[" tree ("," tree)* "]"
///   tree      := singleton | singleton "." forest
///   singleton := label | "s" "{" ordinal "}" "(" tree ")"
///   label     := identifier | "'" identifier "'"
/// Identifiers are [A-Za-z_][A-Za-z0-9_]*; the reserved names "s" and "w"
/// must be quoted to act as labels. Whitespace is insignificant.
/// Syntax errors throw parse_error; undeclared labels throw
/// validation_error.
Term parse_term(std::string_view text, const QOrder& q);

/// Canonical textual form; parses back to an equal Term.
std::string print_term(Term t);

}  // namespace hforest
