#include "motivic/mu_class.hpp"

#include "motivic/errors.hpp"
#include "motivic/normalize.hpp"

namespace motivic {

MuClass MuClass::constant(const Laurent& coefficient)
{
    return term(coefficient, Atom());
}

MuClass MuClass::orbit(std::int64_t size)
{
    if (size < 1)
        throw ValidationError("orbit size must be >= 1, got " + std::to_string(size));
    return size == 1 ? one() : term(Laurent(1), Atom::single(Orbit{size}));
}

MuClass MuClass::term(const Laurent& coefficient, Atom atom)
{
    MuClass c;
    c.add_term(atom, coefficient);
    return c;
}

Laurent MuClass::coefficient(const Atom& atom) const
{
    auto it = terms_.find(atom);
    return it == terms_.end() ? Laurent() : it->second;
}

bool MuClass::is_trivial_action() const
{
    for (const auto& [atom, coeff] : terms_)
        if (!atom.is_trivial_action())
            return false;
    return true;
}

bool MuClass::has_opaque() const
{
    for (const auto& [atom, coeff] : terms_)
        if (atom.has_opaque())
            return true;
    return false;
}

void MuClass::add_term(const Atom& atom, const Laurent& coefficient)
{
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(atom, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MuClass& MuClass::operator+=(const MuClass& other)
{
    for (const auto& [atom, coeff] : other.terms_)
        add_term(atom, coeff);
    return *this;
}

MuClass& MuClass::operator-=(const MuClass& other)
{
    for (const auto& [atom, coeff] : other.terms_)
        add_term(atom, -coeff);
    return *this;
}

MuClass& MuClass::operator*=(const Laurent& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [atom, coeff] : terms_)
        coeff *= scalar;
    return *this;
}

MuClass operator*(const MuClass& a, const MuClass& b)
{
    MuClass result;
    for (const auto& [atom_a, coeff_a] : a.terms_) {
        for (const auto& [atom_b, coeff_b] : b.terms_) {
            auto [multiplicity, atom] = multiply(atom_a, atom_b);
            result.add_term(atom, coeff_a * coeff_b * multiplicity);
        }
    }
    return result;
}

MuClass forget_action(const MuClass& c)
{
    RawExpr raw;
    for (const auto& [atom, coeff] : c.terms()) {
        RawTerm t{coeff, {}};
        for (const auto& f : atom.factors()) {
            if (const auto* o = std::get_if<Orbit>(&f))
                t.coefficient *= Integer(o->size);
            else if (const auto* fer = std::get_if<Fermat>(&f))
                t.factors.emplace_back(FermatTrivial{fer->degree, fer->arity});
            else
                std::visit([&](const auto& g) { t.factors.emplace_back(g); }, f);
        }
        raw.push_back(std::move(t));
    }
    return normalize(raw);
}

} // namespace motivic
