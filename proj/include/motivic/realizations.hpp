#pragma once

#include <cstdint>

#include "motivic/atom.hpp"
#include "motivic/epoly.hpp"
#include "motivic/mu_class.hpp"

namespace motivic {

class A1Class;

// Compactly supported Euler characteristic. chi(L) = 1, chi(ORB(d)) = d,
// chi(FER(n, r)) = chi(fer(n, r)) = -n^r for r >= 2, chi(OPQ) = stored value.
Integer chi_c(const AtomFactor& factor);
Integer chi_c(const Atom& atom);
Integer chi_c(const MuClass& c);

// chi_c of the pushforward to the point.
Integer chi_of_a1(const A1Class& f);

/// Hodge-Deligne polynomial of a trivial-action class.
///
/// L maps to uv and fer(n, 2) to uv - g u - g v + 1 - 3n with
/// g = (n - 1)(n - 2) / 2 (smooth projective Fermat curve minus its 3n
/// boundary points). Opaque factors contribute their stored polynomial.
/// Throws RealizationError naming the first factor without a known
/// polynomial: ORB and FER (forget the action first), fer(n, r) with r >= 3,
/// opaque factors without an E-polynomial.
EPoly e_polynomial(const AtomFactor& factor);
EPoly e_polynomial(const MuClass& c);

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// Budget from MOTIVIC_ORACLE_BUDGET, or kDefaultOracleBudget when unset.
// Throws ParseError if the variable is set but not a positive integer.
std::uint64_t oracle_budget_from_env();

// Number of points of {x_1^n + ... + x_r^n = 1} in (F_q^*)^r, by exhaustive
// enumeration over F_q. q must be a prime power coprime to n and (q - 1)^r
// must not exceed `budget`.
std::uint64_t point_count_oracle(std::int64_t degree, std::int64_t arity, std::uint64_t q,
                                 std::uint64_t budget = kDefaultOracleBudget);

} // namespace motivic
