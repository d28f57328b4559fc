#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "motivic/epoly.hpp"
#include "motivic/laurent.hpp"

namespace motivic {

// A free transitive mu-hat-set of `size` points; the action factors through
// mu_size.
struct Orbit {
    std::int64_t size;
    friend auto operator<=>(const Orbit&, const Orbit&) = default;
};

// {x_1^n + ... + x_r^n = 1} in G_m^r with the diagonal mu_n action by
// multiplication. n = degree, r = arity.
struct Fermat {
    std::int64_t degree;
    std::int64_t arity;
    friend auto operator<=>(const Fermat&, const Fermat&) = default;
};

// The same Fermat locus with the trivial action.
struct FermatTrivial {
    std::int64_t degree;
    std::int64_t arity;
    friend auto operator<=>(const FermatTrivial&, const FermatTrivial&) = default;
};

// A class known only through its realizations.
struct Opaque {
    std::string tag;
    Integer chi;
    std::optional<EPoly> epoly;
};

bool operator==(const Opaque& a, const Opaque& b);
bool operator<(const Opaque& a, const Opaque& b);

using AtomFactor = std::variant<Orbit, Fermat, FermatTrivial, Opaque>;

// ORB and FER carry a nontrivial action; fer and OPQ count as trivial.
bool is_equivariant(const AtomFactor& f);

// Canonical product of factors. The empty product is the point class 1.
// Invariant: factors sorted, at most one Orbit factor, no Orbit(1), no
// FermatTrivial with arity 1.
class Atom {
public:
    Atom() = default;

    // Builds the canonical atom from already-reduced factors. Orbit factors
    // must have been fused by the caller; use multiply() for general products.
    static Atom from_reduced(std::vector<AtomFactor> factors);
    static Atom single(AtomFactor factor);

    const std::vector<AtomFactor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    bool is_trivial_action() const;
    bool has_opaque() const;

    // Splits into (trivial-action part, equivariant part).
    std::pair<Atom, Atom> split_action() const;

    // Product of two atoms: multiset union with orbit fusion
    // ORB(d) * ORB(e) = gcd(d, e) * ORB(lcm(d, e)). Returns (multiplicity, atom).
    friend std::pair<Integer, Atom> multiply(const Atom& a, const Atom& b);

    friend bool operator==(const Atom& a, const Atom& b) { return a.factors_ == b.factors_; }
    // Shorter products first, then lexicographic on factors.
    friend bool operator<(const Atom& a, const Atom& b);

private:
    std::vector<AtomFactor> factors_;
};

} // namespace motivic
