#pragma once

#include <map>

#include "motivic/atom.hpp"
#include "motivic/laurent.hpp"

namespace motivic {

// Element of the equivariant class algebra in normal form: a finite sum of
// Laurent-coefficient multiples of canonical atoms. Equality is structural
// equality of normal forms, so equal values are equal classes; unequal values
// are only "not identified by the rewrite rules".
class MuClass {
public:
    using Terms = std::map<Atom, Laurent>;

    MuClass() = default;

    static MuClass zero() { return {}; }
    static MuClass one() { return constant(Laurent(1)); }
    static MuClass constant(const Laurent& coefficient);
    static MuClass lefschetz(Laurent::Exponent exponent = 1) { return constant(Laurent::monomial(exponent)); }
    static MuClass orbit(std::int64_t size);
    // coefficient * atom, atom assumed canonical.
    static MuClass term(const Laurent& coefficient, Atom atom);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Coefficient of the given atom (zero if absent).
    Laurent coefficient(const Atom& atom) const;

    // No ORB or FER factor anywhere.
    bool is_trivial_action() const;
    bool has_opaque() const;

    MuClass& operator+=(const MuClass& other);
    MuClass& operator-=(const MuClass& other);
    MuClass& operator*=(const Laurent& scalar);

    friend MuClass operator+(MuClass a, const MuClass& b) { return a += b; }
    friend MuClass operator-(MuClass a, const MuClass& b) { return a -= b; }
    friend MuClass operator-(MuClass a) { return a *= Laurent(-1); }
    friend MuClass operator*(MuClass a, const Laurent& s) { return a *= s; }
    friend MuClass operator*(const Laurent& s, MuClass a) { return a *= s; }
    // Ordinary product: diagonal action on the fiber product.
    friend MuClass operator*(const MuClass& a, const MuClass& b);

    friend bool operator==(const MuClass& a, const MuClass& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const MuClass& a, const MuClass& b) { return a.terms_ < b.terms_; }

private:
    void add_term(const Atom& atom, const Laurent& coefficient);

    Terms terms_;
};

inline MuClass add(const MuClass& a, const MuClass& b) { return a + b; }
inline MuClass mul(const MuClass& a, const MuClass& b) { return a * b; }

// Replaces ORB(d) by d and FER(n, r) by fer(n, r). The result lies in the
// trivial-action subring. A ring morphism for the ordinary product, not for
// the convolution product.
MuClass forget_action(const MuClass& c);

} // namespace motivic
