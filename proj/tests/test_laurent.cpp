#include <doctest.h>

#include "motivic/epoly.hpp"
#include "motivic/laurent.hpp"
#include "support.hpp"

using namespace motivic;
using testing::L;

namespace {

Rational evaluate(const Laurent& p, const Rational& x)
{
    Rational result = 0;
    for (const auto& [e, c] : p.coefficients()) {
        Rational power = 1;
        for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i)
            power *= x;
        result += Rational(c) * (e < 0 ? Rational(1) / power : power);
    }
    return result;
}

} // namespace

TEST_CASE("laurent basics")
{
    CHECK((L() - Laurent(1)) == Laurent::torus());
    CHECK((Laurent(1) + Laurent(-1)).is_zero());
    CHECK((Laurent::torus() + Laurent(1)) == L());
    CHECK((L(-1) * L()) == Laurent(1));
    CHECK(Laurent::torus().pow(3) == L(3) - Laurent(3) * L(2) + Laurent(3) * L() - Laurent(1));
    CHECK(Laurent::torus().at_one() == 0);
    CHECK((Laurent(5) * L(2)).coefficient(2) == 5);
    CHECK((Laurent(5) * L(2)).coefficient(1) == 0);
    CHECK(Laurent(0).is_zero());
    CHECK(Laurent(7).is_constant());
    CHECK_FALSE(L().is_constant());
}

TEST_CASE("laurent coefficients are unbounded")
{
    Laurent p = Laurent::monomial(0, Integer(1) << 100);
    p *= p;
    CHECK(p.coefficient(0) == (Integer(1) << 200));
}

TEST_CASE("laurent arithmetic agrees with evaluation")
{
    testing::Random rnd(11);
    const Rational points[] = {Rational(2), Rational(-3), Rational(1, 2), Rational(5, 3)};
    for (int trial = 0; trial < 300; ++trial) {
        const Laurent p = rnd.laurent(4), q = rnd.laurent(4);
        for (const auto& x : points) {
            CHECK(evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x));
            CHECK(evaluate(p - q, x) == evaluate(p, x) - evaluate(q, x));
            CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
        }
        const Laurent pq = p * q;
        for (const auto& [e, c] : pq.coefficients())
            CHECK(c != 0);
    }
}

TEST_CASE("epoly arithmetic")
{
    const EPoly uv = EPoly::monomial(1, 1);
    CHECK(EPoly::from_lefschetz(Laurent::torus()) == uv - EPoly::monomial(0, 0));
    CHECK((uv * uv) == EPoly::monomial(2, 2));
    CHECK((uv - EPoly::monomial(0, 0, 5)).at_one() == -4);
    CHECK((uv - uv).coefficients().empty());
}
