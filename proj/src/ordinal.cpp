#include "hforest/ordinal.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "hforest/error.hpp"

namespace hforest {

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal a;
  if (n > 0) a.summands_.push_back({Ordinal(), n});
  return a;
}

Ordinal Ordinal::omega() { return omega_pow(nat(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exp, std::uint64_t mult) {
  Ordinal a;
  if (mult > 0) a.summands_.push_back({exp, mult});
  return a;
}

bool Ordinal::is_finite() const {
  return summands_.empty() || (summands_.size() == 1 && summands_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (summands_.empty()) return 0;
  if (!is_finite()) throw std::invalid_argument("finite_value of an infinite ordinal");
  return summands_[0].count;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (is_zero()) throw std::invalid_argument("leading_exponent of 0");
  return summands_[0].exponent;
}

Ordinal Ordinal::strip_leading() const {
  if (is_zero()) throw std::invalid_argument("strip_leading of 0");
  Ordinal rest;
  if (summands_[0].count > 1)
    rest.summands_.push_back({summands_[0].exponent, summands_[0].count - 1});
  rest.summands_.insert(rest.summands_.end(), summands_.begin() + 1, summands_.end());
  return rest;
}

std::vector<Ordinal> Ordinal::summands() const {
  if (is_zero()) throw std::invalid_argument("summands of 0");
  std::vector<Ordinal> out;
  for (const Summand& s : summands_)
    for (std::uint64_t i = 0; i < s.count; ++i) out.push_back(s.exponent);
  return out;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  const std::size_t n = std::min(summands_.size(), other.summands_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = summands_[i].exponent <=> other.summands_[i].exponent;
    if (c != 0) return c;
    auto m = summands_[i].count <=> other.summands_[i].count;
    if (m != 0) return m;
  }
  return summands_.size() <=> other.summands_.size();
}

bool Ordinal::operator==(const Ordinal& other) const {
  return (*this <=> other) == 0;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.summands_[0].exponent;
  Ordinal out;
  for (const Ordinal::Summand& s : a.summands_) {
    if (s.exponent > lead) {
      out.summands_.push_back(s);
    } else if (s.exponent == lead) {
      out.summands_.push_back({lead, s.count + b.summands_[0].count});
      break;
    } else {
      break;
    }
  }
  if (out.summands_.empty() || out.summands_.back().exponent != lead)
    out.summands_.push_back(b.summands_[0]);
  out.summands_.insert(out.summands_.end(), b.summands_.begin() + 1, b.summands_.end());
  return out;
}

std::string Ordinal::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Summand& s : summands_) {
    if (!first) out += '+';
    first = false;
    if (s.exponent.is_zero()) {
      out += std::to_string(s.count);
      continue;
    }
    out += 'w';
    if (!(s.exponent.is_finite() && s.exponent.finite_value() == 1)) {
      out += '^';
      if (s.exponent.is_finite()) {
        out += std::to_string(s.exponent.finite_value());
      } else {
        out += '(';
        out += s.exponent.str();
        out += ')';
      }
    }
    if (s.count > 1) {
      out += '*';
      out += std::to_string(s.count);
    }
  }
  return out;
}

std::size_t Ordinal::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Summand& s : summands_) {
    h ^= s.exponent.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(s.count) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

struct OrdinalParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
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
    if (!accept(c))
      throw parse_error(std::string("expected '") + c + "' in ordinal", pos);
  }

  std::uint64_t parse_nat() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw parse_error("expected a natural number", pos);
    std::uint64_t value = 0;
    auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || p != text.data() + pos)
      throw parse_error("natural number out of range", start);
    return value;
  }

  Ordinal parse_factor() {
    if (accept('(')) {
      Ordinal inner = parse_ordinal();
      expect(')');
      return inner;
    }
    return Ordinal::nat(parse_nat());
  }

  Ordinal parse_power() {
    skip_ws();
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      Ordinal exp = Ordinal::nat(1);
      if (accept('^')) exp = parse_factor();
      std::uint64_t mult = 1;
      if (accept('*')) mult = parse_nat();
      return Ordinal::omega_pow(exp, mult);
    }
    return Ordinal::nat(parse_nat());
  }

  Ordinal parse_ordinal() {
    Ordinal sum = parse_power();
    while (accept('+')) sum = sum + parse_power();
    return sum;
  }
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  OrdinalParser p{text};
  Ordinal a = p.parse_ordinal();
  p.skip_ws();
  if (p.pos != text.size())
    throw parse_error("trailing input after ordinal", p.pos);
  return a;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.str(); }

}  // namespace hforest
