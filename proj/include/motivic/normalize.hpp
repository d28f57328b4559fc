#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "motivic/atom.hpp"
#include "motivic/mu_class.hpp"

namespace motivic {

// G_m with mu_level acting by multiplication through a character. level 1 is
// the trivial action.
struct Torus {
    std::int64_t level;
    friend auto operator<=>(const Torus&, const Torus&) = default;
};

// Factor of an unnormalized product. Unlike AtomFactor it admits the
// degenerate descriptors ORB(1), FER(2, r), fer(n, 1), fer(2, r) and torus
// factors, all of which the rewrite rules eliminate.
using RawFactor = std::variant<Orbit, Fermat, FermatTrivial, Opaque, Torus>;

struct RawTerm {
    Laurent coefficient;
    std::vector<RawFactor> factors;
};

using RawExpr = std::vector<RawTerm>;

// The rewrite rules. Each strictly decreases the (factor count, orbit count,
// Fermat arity) measure of the term it fires on, so rewriting terminates.
enum class Rule {
    OrbitUnit,            // ORB(1) -> 1
    OrbitFusion,          // ORB(d) ORB(e) -> gcd(d,e) ORB(lcm(d,e))
    TorusTrivialization,  // G_m with character action -> (L - 1)
    ConicFermat,          // FER(2,2) -> (L - 1) - 2 ORB(2)
    QuadricFermat,        // FER(2,r), r >= 3 -> quadric_fermat_class(r)
    QuadricFermatTrivial, // fer(2,r), r >= 2 -> forget_action(quadric_fermat_class(r))
    FermatLine,           // fer(n,1) -> n
};

inline constexpr std::array<Rule, 7> kAllRules = {
    Rule::OrbitUnit,       Rule::OrbitFusion,   Rule::TorusTrivialization,  Rule::ConicFermat,
    Rule::QuadricFermat,   Rule::QuadricFermatTrivial, Rule::FermatLine,
};

std::string_view rule_name(Rule rule);

// Throws ValidationError on malformed descriptors: orbit size < 1,
// FER with n < 2 or r < 2, fer with n < 2 or r < 1, torus level < 1.
void validate(const RawFactor& factor);
void validate(const RawExpr& expr);

// Normal form of a raw expression under the default rule priority.
MuClass normalize(const RawExpr& expr);

// Normal form using the given rule priority: every step fires the first rule
// in `priority` that has a redex. All priorities reach the same normal form.
// `priority` must contain every rule.
MuClass normalize(const RawExpr& expr, std::span<const Rule> priority);

// Single rewrite step on one term, if `rule` applies.
std::optional<RawExpr> apply_rule(Rule rule, const RawTerm& term);

// Reduced form of FER(2, r) for r >= 2, always a combination of 1 and ORB(2).
// Fixed by the conic rule at r = 2 and, above that, by requiring the
// Fermat/orbit convolution rule to agree with the conic rule at n = 2.
MuClass quadric_fermat_class(std::int64_t arity);

RawTerm to_raw(const Laurent& coefficient, const Atom& atom);
RawExpr to_raw(const MuClass& c);

} // namespace motivic
