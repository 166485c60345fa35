#include "hforest/term.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "hforest/error.hpp"
#include "hforest/qorder.hpp"

namespace hforest {

namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

/// Process-wide interning store. Append-only: nodes are never freed, so
/// node pointers and ids stay valid for the life of the process. Interning
/// of equal structures yields equal ids regardless of thread interleaving.
class TermStore {
public:
  static TermStore& instance() {
    static TermStore store;
    return store;
  }

  Term label(std::string_view name) {
    Key key{TermKind::label, std::string(name), Ordinal(), nullptr, nullptr, {}};
    return intern(std::move(key), 1);
  }

  Term sapp(const Ordinal& index, Term body) {
    Key key{TermKind::sapp, {}, index, body.node_, nullptr, {}};
    return intern(std::move(key), 1 + body.node_count());
  }

  Term dot(Term head, Term tail) {
    Key key{TermKind::dot, {}, Ordinal(), head.node_, tail.node_, {}};
    return intern(std::move(key), 1 + head.node_count() + tail.node_count());
  }

  Term forest(std::span<const Term> children) {
    Key key{TermKind::forest, {}, Ordinal(), nullptr, nullptr,
            std::vector<Term>(children.begin(), children.end())};
    std::size_t count = 1;
    for (Term c : children) count += c.node_count();
    return intern(std::move(key), count);
  }

private:
  struct Key {
    TermKind kind;
    std::string label;
    Ordinal index;
    const detail::TermNode* head;
    const detail::TermNode* tail;
    std::vector<Term> children;

    bool operator==(const Key& other) const {
      if (kind != other.kind || head != other.head || tail != other.tail) return false;
      if (kind == TermKind::label && label != other.label) return false;
      if (kind == TermKind::sapp && !(index == other.index)) return false;
      if (kind == TermKind::forest && children != other.children) return false;
      return true;
    }
  };

  struct KeyHash {
    std::size_t operator()(const Key& key) const {
      std::size_t h = static_cast<std::size_t>(key.kind);
      h = hash_mix(h, std::hash<std::string>{}(key.label));
      h = hash_mix(h, key.index.hash());
      h = hash_mix(h, std::hash<const void*>{}(key.head));
      h = hash_mix(h, std::hash<const void*>{}(key.tail));
      for (Term c : key.children) h = hash_mix(h, c.id());
      return h;
    }
  };

  Term intern(Key&& key, std::size_t count) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return Term(it->second);
    detail::TermNode& node = arena_.emplace_back();
    node.kind = key.kind;
    node.id = next_id_++;
    node.count = static_cast<std::uint32_t>(count);
    node.label = key.label;
    node.index = key.index;
    node.head = key.head;
    node.tail = key.tail;
    node.children = key.children;
    map_.emplace(std::move(key), &node);
    return Term(&node);
  }

  std::mutex mu_;
  std::deque<detail::TermNode> arena_;
  std::unordered_map<Key, const detail::TermNode*, KeyHash> map_;
  std::uint32_t next_id_ = 0;
};

Term make_label(std::string_view name) { return TermStore::instance().label(name); }

Term make_sapp(const Ordinal& index, Term body) {
  if (!body.valid() || !body.is_tree())
    throw std::invalid_argument("sapp body must be a tree term");
  return TermStore::instance().sapp(index, body);
}

Term make_dot(Term head, Term tail) {
  if (!head.valid() || !head.is_singleton())
    throw std::invalid_argument("dot head must be a singleton term");
  if (!tail.valid() || !tail.is_forest())
    throw std::invalid_argument("dot tail must be a forest term");
  return TermStore::instance().dot(head, tail);
}

Term make_forest(std::span<const Term> children) {
  for (Term c : children)
    if (!c.valid() || !c.is_tree())
      throw std::invalid_argument("forest children must be tree terms");
  return TermStore::instance().forest(children);
}

Term make_forest(std::initializer_list<Term> children) {
  return make_forest(std::span<const Term>(children.begin(), children.size()));
}

Term empty_forest() { return make_forest(std::span<const Term>{}); }

std::strong_ordering syntactic_compare(Term a, Term b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = static_cast<int>(a.kind()) <=> static_cast<int>(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case TermKind::label:
      return a.label() <=> b.label();
    case TermKind::sapp:
      if (auto c = a.index() <=> b.index(); c != 0) return c;
      return syntactic_compare(a.body(), b.body());
    case TermKind::dot:
      if (auto c = syntactic_compare(a.head(), b.head()); c != 0) return c;
      return syntactic_compare(a.tail(), b.tail());
    case TermKind::forest: {
      const auto ca = a.children(), cb = b.children();
      const std::size_t n = std::min(ca.size(), cb.size());
      for (std::size_t i = 0; i < n; ++i)
        if (auto c = syntactic_compare(ca[i], cb[i]); c != 0) return c;
      return ca.size() <=> cb.size();
    }
  }
  return std::strong_ordering::equal;  // unreachable
}

Term canonicalize(Term t) {
  switch (t.kind()) {
    case TermKind::label:
      return t;
    case TermKind::sapp: {
      Term body = canonicalize(t.body());
      return body == t.body() ? t : make_sapp(t.index(), body);
    }
    case TermKind::dot: {
      Term head = canonicalize(t.head());
      Term tail = canonicalize(t.tail());
      return (head == t.head() && tail == t.tail()) ? t : make_dot(head, tail);
    }
    case TermKind::forest: {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      for (Term c : t.children()) kids.push_back(canonicalize(c));
      std::sort(kids.begin(), kids.end(),
                [](Term x, Term y) { return syntactic_compare(x, y) < 0; });
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
      if (std::equal(kids.begin(), kids.end(), t.children().begin(), t.children().end()))
        return t;
      return make_forest(kids);
    }
  }
  return t;  // unreachable
}

bool in_level(Term t, const Ordinal& xi) {
  if (xi.is_zero()) {
    if (t.kind() == TermKind::label) return true;
    if (t.kind() == TermKind::forest) {
      for (Term c : t.children())
        if (c.kind() != TermKind::label) return false;
      return true;
    }
    return false;
  }
  const Ordinal& lead = xi.leading_exponent();
  switch (t.kind()) {
    case TermKind::label:
      return true;
    case TermKind::forest:
      for (Term c : t.children())
        if (!in_level(c, xi)) return false;
      return true;
    case TermKind::dot:
      return in_level(t.head(), xi) && in_level(t.tail(), xi);
    case TermKind::sapp: {
      auto c = t.index() <=> lead;
      if (c < 0) return in_level(t.body(), xi);      // unary symbol of this layer
      if (c == 0) return in_level(t.body(), xi.strip_leading());  // constant of this layer
      return in_level(t, xi.strip_leading());        // only reachable from the inner class
    }
  }
  return false;  // unreachable
}

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

struct TermParser {
  std::string_view text;
  const QOrder& q;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos);
  }

  std::string lex_ident() {
    skip_ws();
    if (pos >= text.size() || !is_ident_start(text[pos]))
      throw parse_error("expected a label or term", pos);
    const std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  Term label_term(const std::string& name, std::size_t at) {
    if (!q.has_label(name))
      throw validation_error("undeclared label '" + name + "' at offset " + std::to_string(at));
    return make_label(name);
  }

  Ordinal parse_index() {
    expect('{');
    skip_ws();
    const std::size_t start = pos;
    const std::size_t close = text.find('}', pos);
    if (close == std::string_view::npos) throw parse_error("unterminated section index", pos);
    Ordinal index;
    try {
      index = Ordinal::parse(text.substr(start, close - start));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), start + e.position());
    }
    pos = close + 1;
    return index;
  }

  Term parse_singleton() {
    skip_ws();
    if (accept('\'')) {
      const std::size_t at = pos;
      std::string name = lex_ident();
      if (pos >= text.size() || text[pos] != '\'')
        throw parse_error("unterminated quoted label", pos);
      ++pos;
      return label_term(name, at);
    }
    const std::size_t at = pos;
    std::string name = lex_ident();
    if (name == "s") {
      if (!peek('{'))
        throw parse_error("expected '{' after 's' (quote 's' to use it as a label)", pos);
      Ordinal index = parse_index();
      expect('(');
      Term body = parse_tree();
      expect(')');
      return make_sapp(index, body);
    }
    if (name == "w")
      throw parse_error("'w' is reserved for ordinals (quote 'w' to use it as a label)", at);
    return label_term(name, at);
  }

  Term parse_tree() {
    Term s = parse_singleton();
    if (accept('.')) return make_dot(s, parse_forest());
    return s;
  }

  Term parse_forest() {
    expect('[');
    std::vector<Term> kids;
    if (accept(']')) return make_forest(kids);
    kids.push_back(parse_tree());
    while (accept(',')) kids.push_back(parse_tree());
    expect(']');
    return make_forest(kids);
  }

  Term parse_top() {
    Term t = peek('[') ? parse_forest() : parse_tree();
    skip_ws();
    if (pos != text.size()) throw parse_error("trailing input after term", pos);
    return t;
  }
};

void print_rec(Term t, std::string& out) {
  switch (t.kind()) {
    case TermKind::label:
      if (t.label() == "s" || t.label() == "w") {
        out += '\'';
        out += t.label();
        out += '\'';
      } else {
        out += t.label();
      }
      return;
    case TermKind::sapp:
      out += "s{";
      out += t.index().str();
      out += "}(";
      print_rec(t.body(), out);
      out += ')';
      return;
    case TermKind::dot:
      print_rec(t.head(), out);
      out += '.';
      print_rec(t.tail(), out);
      return;
    case TermKind::forest: {
      out += '[';
      bool first = true;
      for (Term c : t.children()) {
        if (!first) out += ',';
        first = false;
        print_rec(c, out);
      }
      out += ']';
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view text, const QOrder& q) {
  TermParser parser{text, q};
  return parser.parse_top();
}

std::string print_term(Term t) {
  std::string out;
  print_rec(t, out);
  return out;
}

}  // namespace hforest
