#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "motivic/laurent.hpp"

namespace motivic {

// Two-variable Laurent polynomial in u, v with integer coefficients; the value
// domain of the Hodge-Deligne realization.
class EPoly {
public:
    using Exponent = std::int64_t;
    using Monomial = std::pair<Exponent, Exponent>; // (power of u, power of v)

    EPoly() = default;
    explicit EPoly(const Integer& constant);

    static EPoly monomial(Exponent u_power, Exponent v_power, const Integer& c = 1);
    // Image of a Laurent polynomial in L under L -> uv.
    static EPoly from_lefschetz(const Laurent& p);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Monomial, Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(Exponent u_power, Exponent v_power) const;

    // Value at u = v = 1.
    Integer at_one() const;

    EPoly& operator+=(const EPoly& other);
    EPoly& operator-=(const EPoly& other);
    EPoly& operator*=(const Integer& scalar);

    friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
    friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
    friend EPoly operator*(const EPoly& a, const EPoly& b);

    friend bool operator==(const EPoly& a, const EPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator<(const EPoly& a, const EPoly& b) { return a.coeffs_ < b.coeffs_; }

private:
    void add_term(const Monomial& m, const Integer& c);

    std::map<Monomial, Integer> coeffs_;
};

} // namespace motivic
