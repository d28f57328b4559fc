#pragma once

#include <map>
#include <utility>

#include "motivic/mu_class.hpp"

namespace motivic {

// Element of the doubly-equivariant group, spanned by exterior products
// A (x) B of canonical atoms.
class BiClass {
public:
    using Key = std::pair<Atom, Atom>;
    using Terms = std::map<Key, Laurent>;

    BiClass() = default;

    const Terms& terms() const { return terms_; }
    void add_term(const Atom& left, const Atom& right, const Laurent& coefficient);

    friend bool operator==(const BiClass& a, const BiClass& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

// Bilinear exterior product a (x) b.
BiClass exterior(const MuClass& a, const MuClass& b);

// Convolution map on a single pair of atoms. Trivial-action factors split off
// multiplicatively; the remaining equivariant parts are evaluated by:
//   one side trivial           -> ordinary product
//   ORB(n) (x) ORB(n)          -> n (L - 1) - FER(n, 2)
//   FER(n, r) (x) ORB(n)       -> (L - 1) fer(n, r-1) ORB(n) + FER(n, r+1) - (L - 1) fer(n, r)
//   anything else              -> one opaque atom tagged with the pair, chi = chi(A) chi(B)
MuClass psi_atoms(const Atom& left, const Atom& right);

MuClass psi_pair(const BiClass& p);

// Convolution product a * b = psi_pair(a (x) b).
MuClass star(const MuClass& a, const MuClass& b);

// ORB(n)^{*r} in closed form: ORB(n) for r = 1, (L - 1) fer(n, r-1) - FER(n, r)
// for r >= 2. Throws ValidationError unless n >= 2 and r >= 1.
MuClass star_power(std::int64_t n, std::int64_t r);

enum class SymbolicVerdict { Equal, Different, SkippedOpaque };

struct AssocReport {
    MuClass left_fold;  // (a * b) * c
    MuClass right_fold; // a * (b * c)
    // Equal when the normal forms coincide. Different folds are reported as
    // SkippedOpaque if either contains an opaque atom, since opaque atoms are
    // not compared beyond their tags.
    SymbolicVerdict symbolic;
    Integer chi_left;
    Integer chi_right;
    bool chi_consistent;
};

AssocReport assoc_check(const MuClass& a, const MuClass& b, const MuClass& c);

} // namespace motivic
