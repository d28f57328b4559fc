#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "motivic/a1_class.hpp"
#include "motivic/mu_class.hpp"
#include "motivic/normalize.hpp"

namespace testing {

using namespace motivic;

inline MuClass cls(std::vector<RawFactor> factors, Laurent coefficient = Laurent(1))
{
    return normalize(RawExpr{RawTerm{std::move(coefficient), std::move(factors)}});
}

inline MuClass one() { return MuClass::one(); }
inline MuClass lef(Laurent::Exponent k = 1) { return MuClass::lefschetz(k); }
inline MuClass gm() { return lef() - one(); }
inline MuClass orb(std::int64_t d) { return cls({Orbit{d}}); }
inline MuClass FER(std::int64_t n, std::int64_t r) { return cls({Fermat{n, r}}); }
inline MuClass fer(std::int64_t n, std::int64_t r) { return cls({FermatTrivial{n, r}}); }
inline MuClass opq(std::string tag, long chi) { return cls({Opaque{std::move(tag), Integer(chi), std::nullopt}}); }
inline Laurent L(Laurent::Exponent k = 1) { return Laurent::monomial(k); }

// Hand-rolled generators; each test seeds its own engine so failures replay.
struct Random {
    std::mt19937_64 engine;
    explicit Random(std::uint64_t seed) : engine(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
    }
    bool coin() { return uniform(0, 1) == 1; }

    Laurent laurent(int max_terms = 3)
    {
        Laurent p;
        const auto count = uniform(1, max_terms);
        for (std::int64_t i = 0; i < count; ++i)
            p += Laurent::monomial(uniform(-2, 2), Integer(uniform(-3, 3)));
        return p;
    }

    RawFactor factor(bool with_opaque, bool with_trivial)
    {
        const auto kinds = with_opaque ? 5 : 4;
        switch (uniform(0, kinds - 1)) {
        case 0:
        case 1: return Orbit{uniform(1, 6)};
        case 2: return Fermat{uniform(2, 4), uniform(2, 3)};
        case 3:
            if (with_trivial)
                return FermatTrivial{uniform(2, 4), uniform(1, 3)};
            return Orbit{uniform(2, 6)};
        default: return Opaque{"t" + std::to_string(uniform(0, 2)), Integer(uniform(-5, 5)), std::nullopt};
        }
    }

    RawExpr raw(bool with_opaque = false, bool with_trivial = true, bool with_torus = false, int max_terms = 3)
    {
        RawExpr e;
        const auto count = uniform(0, max_terms);
        for (std::int64_t i = 0; i < count; ++i) {
            RawTerm t{laurent(), {}};
            const auto width = uniform(0, 2);
            for (std::int64_t j = 0; j < width; ++j)
                t.factors.push_back(factor(with_opaque, with_trivial));
            if (with_torus && coin())
                t.factors.push_back(Torus{uniform(1, 4)});
            e.push_back(std::move(t));
        }
        return e;
    }

    MuClass mu(bool with_opaque = false, bool with_trivial = true) { return normalize(raw(with_opaque, with_trivial)); }

    A1Class a1(bool with_opaque = false)
    {
        A1Class f;
        const auto count = uniform(0, 3);
        for (std::int64_t i = 0; i < count; ++i)
            f += A1Class::at(BasePoint(Rational(uniform(-3, 3), uniform(1, 2))), mu(with_opaque));
        return f;
    }
};

} // namespace testing
