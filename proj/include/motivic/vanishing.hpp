#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "motivic/a1_class.hpp"
#include "motivic/mu_class.hpp"

namespace motivic {

enum class Locus { Regular, Singular };

struct Component {
    std::string id;
    std::int64_t multiplicity;
};

// Open stratum E°_I of the exceptional divisor together with its Galois
// cover. base is the class of E°_I (trivial action), cover the class of the
// mu_{m_I}-cover.
struct Stratum {
    std::vector<std::string> index_set;
    MuClass base;
    MuClass cover;
    Locus locus = Locus::Singular;
};

// Combinatorics of an embedded resolution over one critical value, plus the
// class of the fiber split into its regular part and its part meeting the
// singular locus.
struct SNCDatum {
    std::vector<Component> components;
    std::vector<Stratum> strata;
    MuClass fiber_regular;
    MuClass fiber_singular;
};

// Lists every violated invariant; empty iff the datum is valid.
std::vector<std::string> validate_datum(const SNCDatum& d);

// gcd of the multiplicities of the components in I. Throws ValidationError if
// some id is not a declared component.
std::int64_t stratum_multiplicity(const SNCDatum& d, const Stratum& s);

// psi = sum over strata of (1 - L)^{|I| - 1} [cover].
MuClass nearby_fiber(const SNCDatum& d);

struct VanishingCycles {
    MuClass phi;         // fiber_singular - singular-strata part of psi
    MuClass phi_regular; // fiber_regular  - regular-strata part of psi; zero for genuine resolutions
};

VanishingCycles vanishing_cycles(const SNCDatum& d);

struct Critical {
    BasePoint value;
    SNCDatum datum;
};

struct Resolved {
    std::vector<Critical> criticals;
};

// A potential constant equal to `value` on a space of class fiber_class.
struct Constant {
    BasePoint value;
    MuClass fiber_class;
};

// Smooth proper family: no vanishing cycles.
struct SmoothProper {};

using Generator = std::variant<Resolved, Constant, SmoothProper>;

struct PresentationTerm {
    Integer coefficient;
    Generator generator;
};

// Integer combination of generators of the relative Grothendieck group over
// the affine line.
struct Presentation {
    std::vector<PresentationTerm> terms;
};

// Throws ValidationError describing the first problem found.
void validate_generator(const Generator& g);

A1Class phi_generator(const Generator& g);
A1Class phi_measure(const Presentation& p);

struct PointComparison {
    BasePoint point;
    MuClass convolved;
    MuClass direct;
    bool equal;
};

struct ThomSebastianiReport {
    A1Class convolved; // phi(gV) * phi(gW)
    A1Class direct;    // phi(direct)
    std::vector<PointComparison> points;
    bool equal;
};

ThomSebastianiReport ts_check(const Generator& v, const Generator& w, const Generator& direct);

} // namespace motivic
