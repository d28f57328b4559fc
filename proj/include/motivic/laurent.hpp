#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

namespace motivic {

using Integer = mpz_class;
using Rational = mpq_class;

// Laurent polynomial in the Lefschetz class L with arbitrary-precision integer
// coefficients. Zero coefficients are never stored.
class Laurent {
public:
    using Exponent = std::int64_t;

    Laurent() = default;
    explicit Laurent(const Integer& constant);
    explicit Laurent(long constant) : Laurent(Integer(constant)) {}

    // c * L^exponent
    static Laurent monomial(Exponent exponent, const Integer& c = 1);
    // L - 1, the class of the split torus.
    static Laurent torus();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return coeffs_.size() == 1; }

    const std::map<Exponent, Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(Exponent exponent) const;

    // Value under L -> 1.
    Integer at_one() const;

    Laurent pow(unsigned exponent) const;

    Laurent& operator+=(const Laurent& other);
    Laurent& operator-=(const Laurent& other);
    Laurent& operator*=(const Laurent& other);
    Laurent& operator*=(const Integer& scalar);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Integer& s) { return a *= s; }
    friend Laurent operator*(const Integer& s, Laurent a) { return a *= s; }
    friend Laurent operator-(Laurent a);

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.coeffs_ < b.coeffs_; }

private:
    void add_term(Exponent exponent, const Integer& c);

    std::map<Exponent, Integer> coeffs_;
};

} // namespace motivic
