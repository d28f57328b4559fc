#include "motivic/epoly.hpp"

namespace motivic {

EPoly::EPoly(const Integer& constant)
{
    add_term({0, 0}, constant);
}

EPoly EPoly::monomial(Exponent u_power, Exponent v_power, const Integer& c)
{
    EPoly result;
    result.add_term({u_power, v_power}, c);
    return result;
}

EPoly EPoly::from_lefschetz(const Laurent& p)
{
    EPoly result;
    for (const auto& [e, c] : p.coefficients())
        result.add_term({e, e}, c);
    return result;
}

Integer EPoly::coefficient(Exponent u_power, Exponent v_power) const
{
    auto it = coeffs_.find({u_power, v_power});
    return it == coeffs_.end() ? Integer(0) : it->second;
}

Integer EPoly::at_one() const
{
    Integer sum = 0;
    for (const auto& [m, c] : coeffs_)
        sum += c;
    return sum;
}

void EPoly::add_term(const Monomial& m, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

EPoly& EPoly::operator+=(const EPoly& other)
{
    for (const auto& [m, c] : other.coeffs_)
        add_term(m, c);
    return *this;
}

EPoly& EPoly::operator-=(const EPoly& other)
{
    for (const auto& [m, c] : other.coeffs_)
        add_term(m, -c);
    return *this;
}

EPoly& EPoly::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [m, c] : coeffs_)
        c *= scalar;
    return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b)
{
    EPoly result;
    for (const auto& [ma, ca] : a.coeffs_)
        for (const auto& [mb, cb] : b.coeffs_)
            result.add_term({ma.first + mb.first, ma.second + mb.second}, Integer(ca * cb));
    return result;
}

} // namespace motivic
