#include "motivic/atom.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace motivic {

bool operator==(const Opaque& a, const Opaque& b)
{
    return a.tag == b.tag && a.chi == b.chi && a.epoly == b.epoly;
}

bool operator<(const Opaque& a, const Opaque& b)
{
    if (a.tag != b.tag)
        return a.tag < b.tag;
    if (a.chi != b.chi)
        return a.chi < b.chi;
    return a.epoly < b.epoly;
}

bool is_equivariant(const AtomFactor& f)
{
    return std::holds_alternative<Orbit>(f) || std::holds_alternative<Fermat>(f);
}

Atom Atom::from_reduced(std::vector<AtomFactor> factors)
{
    Atom atom;
    atom.factors_ = std::move(factors);
    std::sort(atom.factors_.begin(), atom.factors_.end());
    return atom;
}

Atom Atom::single(AtomFactor factor)
{
    return from_reduced({std::move(factor)});
}

bool Atom::is_trivial_action() const
{
    return std::none_of(factors_.begin(), factors_.end(), is_equivariant);
}

bool Atom::has_opaque() const
{
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const AtomFactor& f) { return std::holds_alternative<Opaque>(f); });
}

std::pair<Atom, Atom> Atom::split_action() const
{
    Atom trivial, equivariant;
    for (const auto& f : factors_)
        (is_equivariant(f) ? equivariant : trivial).factors_.push_back(f);
    return {trivial, equivariant};
}

std::pair<Integer, Atom> multiply(const Atom& a, const Atom& b)
{
    Integer multiplicity = 1;
    std::int64_t orbit = 1;
    std::vector<AtomFactor> merged;
    merged.reserve(a.factors_.size() + b.factors_.size());
    for (const auto* side : {&a.factors_, &b.factors_}) {
        for (const auto& f : *side) {
            if (const auto* o = std::get_if<Orbit>(&f)) {
                multiplicity *= std::gcd(orbit, o->size);
                orbit = std::lcm(orbit, o->size);
            } else {
                merged.push_back(f);
            }
        }
    }
    if (orbit > 1)
        merged.emplace_back(Orbit{orbit});
    return {multiplicity, Atom::from_reduced(std::move(merged))};
}

bool operator<(const Atom& a, const Atom& b)
{
    if (a.factors_.size() != b.factors_.size())
        return a.factors_.size() < b.factors_.size();
    return a.factors_ < b.factors_;
}

} // namespace motivic
