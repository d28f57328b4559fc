#include "motivic/convolution.hpp"

#include "motivic/errors.hpp"
#include "motivic/normalize.hpp"
#include "motivic/pretty.hpp"
#include "motivic/realizations.hpp"

namespace motivic {

namespace {

std::optional<std::int64_t> lone_orbit(const Atom& a)
{
    if (a.factors().size() != 1)
        return std::nullopt;
    if (const auto* o = std::get_if<Orbit>(&a.factors().front()))
        return o->size;
    return std::nullopt;
}

std::optional<Fermat> lone_fermat(const Atom& a)
{
    if (a.factors().size() != 1)
        return std::nullopt;
    if (const auto* f = std::get_if<Fermat>(&a.factors().front()))
        return *f;
    return std::nullopt;
}

// Psi on two purely equivariant atoms.
MuClass psi_equivariant(const Atom& left, const Atom& right)
{
    const Laurent torus = Laurent::torus();
    const auto orbit_left = lone_orbit(left);
    const auto orbit_right = lone_orbit(right);
    if (orbit_left && orbit_right && *orbit_left == *orbit_right) {
        const std::int64_t n = *orbit_left;
        return normalize(RawExpr{
            RawTerm{torus * Integer(n), {}},
            RawTerm{Laurent(-1), {Fermat{n, 2}}},
        });
    }

    auto fermat_orbit = [&](const Fermat& f, std::int64_t n) -> std::optional<MuClass> {
        if (f.degree != n)
            return std::nullopt;
        return normalize(RawExpr{
            RawTerm{torus, {FermatTrivial{n, f.arity - 1}, Orbit{n}}},
            RawTerm{Laurent(1), {Fermat{n, f.arity + 1}}},
            RawTerm{-torus, {FermatTrivial{n, f.arity}}},
        });
    };
    if (const auto f = lone_fermat(left); f && orbit_right)
        if (auto result = fermat_orbit(*f, *orbit_right))
            return *result;
    if (const auto f = lone_fermat(right); f && orbit_left)
        if (auto result = fermat_orbit(*f, *orbit_left))
            return *result;

    // Fallback: opaque atom whose tag records the unordered pair.
    const Atom& lo = right < left ? right : left;
    const Atom& hi = right < left ? left : right;
    Opaque opaque{"psi(" + pretty(lo) + "," + pretty(hi) + ")", chi_c(left) * chi_c(right), std::nullopt};
    return MuClass::term(Laurent(1), Atom::single(std::move(opaque)));
}

} // namespace

void BiClass::add_term(const Atom& left, const Atom& right, const Laurent& coefficient)
{
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(Key{left, right}, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BiClass exterior(const MuClass& a, const MuClass& b)
{
    BiClass result;
    for (const auto& [atom_a, coeff_a] : a.terms())
        for (const auto& [atom_b, coeff_b] : b.terms())
            result.add_term(atom_a, atom_b, coeff_a * coeff_b);
    return result;
}

MuClass psi_atoms(const Atom& left, const Atom& right)
{
    const auto [trivial_left, equivariant_left] = left.split_action();
    const auto [trivial_right, equivariant_right] = right.split_action();
    const MuClass trivial = MuClass::term(Laurent(1), trivial_left) * MuClass::term(Laurent(1), trivial_right);
    if (equivariant_left.is_unit() || equivariant_right.is_unit())
        return trivial * MuClass::term(Laurent(1), equivariant_left) * MuClass::term(Laurent(1), equivariant_right);
    return trivial * psi_equivariant(equivariant_left, equivariant_right);
}

MuClass psi_pair(const BiClass& p)
{
    MuClass result;
    for (const auto& [key, coeff] : p.terms())
        result += psi_atoms(key.first, key.second) * coeff;
    return result;
}

MuClass star(const MuClass& a, const MuClass& b)
{
    return psi_pair(exterior(a, b));
}

MuClass star_power(std::int64_t n, std::int64_t r)
{
    if (n < 2 || r < 1)
        throw ValidationError("star_power needs n >= 2 and r >= 1, got n = " + std::to_string(n) +
                              ", r = " + std::to_string(r));
    if (r == 1)
        return MuClass::orbit(n);
    return normalize(RawExpr{
        RawTerm{Laurent::torus(), {FermatTrivial{n, r - 1}}},
        RawTerm{Laurent(-1), {Fermat{n, r}}},
    });
}

AssocReport assoc_check(const MuClass& a, const MuClass& b, const MuClass& c)
{
    AssocReport report;
    report.left_fold = star(star(a, b), c);
    report.right_fold = star(a, star(b, c));
    if (report.left_fold == report.right_fold)
        report.symbolic = SymbolicVerdict::Equal;
    else if (report.left_fold.has_opaque() || report.right_fold.has_opaque())
        report.symbolic = SymbolicVerdict::SkippedOpaque;
    else
        report.symbolic = SymbolicVerdict::Different;
    report.chi_left = chi_c(report.left_fold);
    report.chi_right = chi_c(report.right_fold);
    report.chi_consistent = report.chi_left == report.chi_right;
    return report;
}

} // namespace motivic
