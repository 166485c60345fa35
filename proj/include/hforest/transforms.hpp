#pragma once

#include "hforest/hcalc.hpp"
#include "hforest/ordinal.hpp"
#include "hforest/term.hpp"

namespace hforest {

/// Section s_a: wraps a tree term in s_a(.); applied componentwise to
/// forests (the empty forest maps to itself).
Term apply_s(const Ordinal& alpha, Term t);

/// Iterated section s*_xi: one s per CNF summand of xi, innermost index
/// a_m, outermost a_0. s*_0 is the identity.
Term apply_s_star(const Ordinal& xi, Term t);

/// Retraction r_a:
///   r_a(q) = q;  r_a(F_0 u F_1 u ...) componentwise;
///   r_a(T.V) = r_a(T) u r_a(V) as one flat forest;
///   r_a(s_b(T)) = r_a(T) if a > b, T if a == b, s_b(T) if a < b.
Term apply_r(const Ordinal& alpha, Term t);

/// Iterated retraction r*_xi: applies r_{a_0} first, then a_1, ..., a_m.
/// r*_0 is the identity; r*_xi(s*_xi(T)) == T structurally.
Term apply_r_star(const Ordinal& xi, Term t);

/// The induced quasiorder: T <=_h^xi S iff r*_xi(T) <=_h r*_xi(S).
bool leq_h_xi(const Ordinal& xi, HContext& ctx, Term t, Term s);
bool leq_h_xi(const Ordinal& xi, const QOrder& q, Term t, Term s);

}  // namespace hforest
