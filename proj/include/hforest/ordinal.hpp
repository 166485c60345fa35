#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hforest {

/// An ordinal below epsilon_0 in Cantor normal form:
///   w^{e_0} * m_0 + ... + w^{e_k} * m_k   with e_0 > ... > e_k, m_i >= 1.
/// The empty summand list is 0. Exponents are themselves Ordinals, so the
/// representation is a finite well-founded tree. Immutable after
/// construction; all operations are pure.
class Ordinal {
public:
  struct Summand;

  /// Zero.
  Ordinal() = default;

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  /// w^exp * mult (zero when mult == 0).
  static Ordinal omega_pow(const Ordinal& exp, std::uint64_t mult = 1);

  bool is_zero() const { return summands_.empty(); }
  /// True when the ordinal is a natural number (possibly 0).
  bool is_finite() const;
  /// The natural-number value; only valid when is_finite().
  std::uint64_t finite_value() const;

  const std::vector<Summand>& cnf() const { return summands_; }

  /// Exponent of the leading summand. Requires a non-zero ordinal.
  const Ordinal& leading_exponent() const;
  /// The ordinal with one copy of the leading omega-power removed, i.e. the
  /// eta in xi = w^{a_0} + eta. Requires a non-zero ordinal.
  Ordinal strip_leading() const;

  /// The non-increasing exponent sequence (a_0, ..., a_m) with
  /// this == w^{a_0} + ... + w^{a_m}; multiplicity k yields k repetitions.
  /// Throws std::invalid_argument on zero.
  std::vector<Ordinal> summands() const;

  std::strong_ordering operator<=>(const Ordinal& other) const;
  bool operator==(const Ordinal& other) const;

  /// Ordinal addition (left absorption: 1 + w == w).
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);

  std::string str() const;
  std::size_t hash() const;

  /// Parses the ASCII ordinal grammar:
  ///   ordinal := "0" | power ("+" power)*
  ///   power   := "w" ("^" factor)? ("*" nat)? | nat
  ///   factor  := nat | "(" ordinal ")"
  /// Non-canonical input (e.g. "w+w", "1+w") is normalized, never rejected.
  static Ordinal parse(std::string_view text);

private:
  std::vector<Summand> summands_;
};

struct Ordinal::Summand {
  Ordinal exponent;
  std::uint64_t count = 1;

  bool operator==(const Summand& other) const = default;
};

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace hforest
