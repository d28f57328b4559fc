#include "motivic/realizations.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "motivic/a1_class.hpp"
#include "motivic/convolution.hpp"
#include "motivic/errors.hpp"
#include "motivic/pretty.hpp"

namespace motivic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

Integer fermat_chi(std::int64_t degree, std::int64_t arity)
{
    if (arity == 1)
        return Integer(degree);
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(degree), static_cast<unsigned long>(arity));
    return -p;
}

// GF(q) with elements encoded as integers in [0, q): the base-p digits of an
// element are its coordinates in the power basis of a primitive polynomial.
class FiniteField {
public:
    explicit FiniteField(std::uint64_t q)
        : q_(q)
    {
        factor_prime_power();
        if (degree_ > 1)
            build_extension();
    }

    std::uint64_t size() const { return q_; }
    std::uint64_t characteristic() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        if (degree_ == 1)
            return (a + b) % p_;
        std::uint64_t result = 0, scale = 1;
        for (unsigned i = 0; i < degree_; ++i) {
            result += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return result;
    }

    // x^e for x != 0.
    std::uint64_t power(std::uint64_t x, std::uint64_t e) const
    {
        if (degree_ == 1) {
            std::uint64_t result = 1, base = x % p_;
            for (; e != 0; e >>= 1) {
                if (e & 1)
                    result = static_cast<std::uint64_t>((unsigned __int128)result * base % p_);
                base = static_cast<std::uint64_t>((unsigned __int128)base * base % p_);
            }
            return result;
        }
        return exp_[(log_[x] * (e % (q_ - 1))) % (q_ - 1)];
    }

private:
    void factor_prime_power()
    {
        if (q_ < 2)
            throw ValidationError("field size must be a prime power >= 2, got " + std::to_string(q_));
        std::uint64_t p = 0;
        for (std::uint64_t d = 2; d * d <= q_; ++d)
            if (q_ % d == 0) {
                p = d;
                break;
            }
        if (p == 0)
            p = q_;
        std::uint64_t rest = q_;
        unsigned k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest != 1)
            throw ValidationError("field size must be a prime power, got " + std::to_string(q_));
        p_ = p;
        degree_ = k;
    }

    // Multiplies the element a by the generator x modulo the monic polynomial
    // with low coefficients `poly` (x^k = -sum poly[i] x^i).
    std::uint64_t times_x(std::uint64_t a, const std::vector<std::uint64_t>& poly) const
    {
        std::vector<std::uint64_t> digits(degree_ + 1, 0);
        for (unsigned i = 0; i < degree_; ++i) {
            digits[i + 1] = a % p_;
            a /= p_;
        }
        const std::uint64_t top = digits[degree_];
        for (unsigned i = 0; i < degree_; ++i)
            digits[i] = (digits[i] + (p_ - poly[i]) * top) % p_;
        std::uint64_t result = 0, scale = 1;
        for (unsigned i = 0; i < degree_; ++i) {
            result += digits[i] * scale;
            scale *= p_;
        }
        return result;
    }

    void build_extension()
    {
        std::vector<std::uint64_t> poly(degree_, 0);
        const std::uint64_t candidates = q_;
        for (std::uint64_t code = 0; code < candidates; ++code) {
            std::uint64_t c = code;
            for (unsigned i = 0; i < degree_; ++i) {
                poly[i] = c % p_;
                c /= p_;
            }
            if (poly[0] == 0)
                continue;
            exp_.assign(q_ - 1, 0);
            log_.assign(q_, 0);
            std::uint64_t x = 1;
            bool primitive = true;
            for (std::uint64_t i = 0; i < q_ - 1; ++i) {
                if (i > 0 && x == 1) {
                    primitive = false;
                    break;
                }
                exp_[i] = x;
                log_[x] = i;
                x = times_x(x, poly);
            }
            if (primitive && x == 1)
                return;
        }
        throw std::logic_error("no primitive polynomial found");
    }

    std::uint64_t q_ = 0;
    std::uint64_t p_ = 0;
    unsigned degree_ = 1;
    std::vector<std::uint64_t> exp_;
    std::vector<std::uint64_t> log_;
};

} // namespace

Integer chi_c(const AtomFactor& factor)
{
    return std::visit(overloaded{
                          [](const Orbit& o) { return Integer(o.size); },
                          [](const Fermat& f) { return fermat_chi(f.degree, f.arity); },
                          [](const FermatTrivial& f) { return fermat_chi(f.degree, f.arity); },
                          [](const Opaque& o) { return o.chi; },
                      },
                      factor);
}

Integer chi_c(const Atom& atom)
{
    Integer result = 1;
    for (const auto& f : atom.factors())
        result *= chi_c(f);
    return result;
}

Integer chi_c(const MuClass& c)
{
    Integer result = 0;
    for (const auto& [atom, coeff] : c.terms())
        result += coeff.at_one() * chi_c(atom);
    return result;
}

Integer chi_of_a1(const A1Class& f)
{
    return chi_c(epsilon_push(f));
}

EPoly e_polynomial(const AtomFactor& factor)
{
    return std::visit(
        overloaded{
            [](const Orbit& o) -> EPoly {
                throw RealizationError("realization undefined on equivariant factor " + pretty(Orbit(o)) +
                                       "; forget the action first");
            },
            [](const Fermat& f) -> EPoly {
                throw RealizationError("realization undefined on equivariant factor " + pretty(Fermat(f)) +
                                       "; forget the action first");
            },
            [](const FermatTrivial& f) -> EPoly {
                if (f.arity == 1)
                    return EPoly(Integer(f.degree));
                if (f.arity != 2)
                    throw RealizationError("realization undefined: no E-polynomial for " +
                                           pretty(FermatTrivial(f)));
                const Integer n = f.degree;
                const Integer genus = (n - 1) * (n - 2) / 2;
                return EPoly::monomial(1, 1) - EPoly::monomial(1, 0, genus) - EPoly::monomial(0, 1, genus) +
                       EPoly(Integer(1 - 3 * n));
            },
            [](const Opaque& o) -> EPoly {
                if (!o.epoly)
                    throw RealizationError("realization undefined: opaque factor " + pretty(Opaque(o)) +
                                           " carries no E-polynomial");
                return *o.epoly;
            },
        },
        factor);
}

EPoly e_polynomial(const MuClass& c)
{
    EPoly result;
    for (const auto& [atom, coeff] : c.terms()) {
        EPoly term = EPoly::from_lefschetz(coeff);
        for (const auto& f : atom.factors())
            term = term * e_polynomial(f);
        result += term;
    }
    return result;
}

std::uint64_t oracle_budget_from_env()
{
    const char* raw = std::getenv("MOTIVIC_ORACLE_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return kDefaultOracleBudget;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || value == 0 || raw[0] == '-')
        throw ParseError(std::string("MOTIVIC_ORACLE_BUDGET must be a positive integer, got '") + raw + "'");
    return value;
}

std::uint64_t point_count_oracle(std::int64_t degree, std::int64_t arity, std::uint64_t q, std::uint64_t budget)
{
    if (degree < 2 || arity < 1)
        throw ValidationError("oracle needs fer(n, r) with n >= 2 and r >= 1");
    const FiniteField field(q);
    if (static_cast<std::uint64_t>(degree) % field.characteristic() == 0)
        throw ValidationError("q = " + std::to_string(q) + " is not coprime to n = " + std::to_string(degree));

    std::uint64_t tuples = 1;
    for (std::int64_t i = 0; i < arity; ++i) {
        if (tuples > budget / (q - 1))
            throw BudgetError("enumerating (F_" + std::to_string(q) + "^*)^" + std::to_string(arity) +
                              " exceeds the budget of " + std::to_string(budget) + " tuples");
        tuples *= q - 1;
    }

    std::vector<std::uint64_t> powers(q, 0);
    for (std::uint64_t x = 1; x < q; ++x)
        powers[x] = field.power(x, static_cast<std::uint64_t>(degree));

    // Odometer over (F_q^*)^r keeping the partial sums of n-th powers.
    const auto r = static_cast<std::size_t>(arity);
    std::vector<std::uint64_t> point(r, 1);
    std::vector<std::uint64_t> partial(r + 1, 0);
    for (std::size_t i = 0; i < r; ++i)
        partial[i + 1] = field.add(partial[i], powers[point[i]]);
    std::uint64_t count = 0;
    while (true) {
        if (partial[r] == 1)
            ++count;
        std::size_t i = r;
        while (i > 0 && point[i - 1] == q - 1) {
            point[i - 1] = 1;
            --i;
        }
        if (i == 0)
            break;
        ++point[i - 1];
        for (std::size_t j = i - 1; j < r; ++j)
            partial[j + 1] = field.add(partial[j], powers[point[j]]);
    }
    return count;
}

} // namespace motivic
