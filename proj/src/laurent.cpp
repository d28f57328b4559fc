#include "motivic/laurent.hpp"

namespace motivic {

Laurent::Laurent(const Integer& constant)
{
    add_term(0, constant);
}

Laurent Laurent::monomial(Exponent exponent, const Integer& c)
{
    Laurent result;
    result.add_term(exponent, c);
    return result;
}

Laurent Laurent::torus()
{
    return monomial(1) - Laurent(1);
}

bool Laurent::is_constant() const
{
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Integer Laurent::coefficient(Exponent exponent) const
{
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

Integer Laurent::at_one() const
{
    Integer sum = 0;
    for (const auto& [e, c] : coeffs_)
        sum += c;
    return sum;
}

Laurent Laurent::pow(unsigned exponent) const
{
    Laurent result(1);
    Laurent base = *this;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent != 0)
            base *= base;
    }
    return result;
}

void Laurent::add_term(Exponent exponent, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& other)
{
    for (const auto& [e, c] : other.coeffs_)
        add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& other)
{
    for (const auto& [e, c] : other.coeffs_)
        add_term(e, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& other)
{
    *this = *this * other;
    return *this;
}

Laurent& Laurent::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, c] : coeffs_)
        c *= scalar;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    Laurent result;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            result.add_term(ea + eb, Integer(ca * cb));
    return result;
}

Laurent operator-(Laurent a)
{
    for (auto& [e, c] : a.coeffs_)
        c = -c;
    return a;
}

} // namespace motivic
