#include "motivic/normalize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// Term with factor `index` removed, coefficient scaled.
RawTerm without(const RawTerm& term, std::size_t index, const Laurent& scale)
{
    RawTerm out{term.coefficient * scale, {}};
    out.factors.reserve(term.factors.size());
    for (std::size_t i = 0; i < term.factors.size(); ++i)
        if (i != index)
            out.factors.push_back(term.factors[i]);
    return out;
}

template <class T, class Pred>
std::optional<std::size_t> find_factor(const RawTerm& term, Pred pred)
{
    for (std::size_t i = 0; i < term.factors.size(); ++i)
        if (const auto* f = std::get_if<T>(&term.factors[i]); f && pred(*f))
            return i;
    return std::nullopt;
}

// Replaces factor `index` by the combination `replacement` of atoms.
RawExpr substitute(const RawTerm& term, std::size_t index, const MuClass& replacement)
{
    RawExpr out;
    for (const auto& [atom, coeff] : replacement.terms()) {
        RawTerm t = without(term, index, coeff);
        for (const auto& f : atom.factors())
            std::visit([&](const auto& g) { t.factors.emplace_back(g); }, f);
        out.push_back(std::move(t));
    }
    return out;
}

struct QuadricStep {
    Laurent constant; // coefficient of 1
    Laurent orbit;    // coefficient of ORB(2)
};

} // namespace

std::string_view rule_name(Rule rule)
{
    switch (rule) {
    case Rule::OrbitUnit: return "orbit-unit";
    case Rule::OrbitFusion: return "orbit-fusion";
    case Rule::TorusTrivialization: return "torus-trivialization";
    case Rule::ConicFermat: return "conic-fermat";
    case Rule::QuadricFermat: return "quadric-fermat";
    case Rule::QuadricFermatTrivial: return "quadric-fermat-trivial";
    case Rule::FermatLine: return "fermat-line";
    }
    return "unknown";
}

void validate(const RawFactor& factor)
{
    std::visit(overloaded{
                   [](const Orbit& o) {
                       if (o.size < 1)
                           throw ValidationError("orbit size must be >= 1, got " + std::to_string(o.size));
                   },
                   [](const Fermat& f) {
                       if (f.degree < 2 || f.arity < 2)
                           throw ValidationError("FER(n, r) needs n >= 2 and r >= 2, got FER(" +
                                                 std::to_string(f.degree) + ", " + std::to_string(f.arity) + ")");
                   },
                   [](const FermatTrivial& f) {
                       if (f.degree < 2 || f.arity < 1)
                           throw ValidationError("fer(n, r) needs n >= 2 and r >= 1, got fer(" +
                                                 std::to_string(f.degree) + ", " + std::to_string(f.arity) + ")");
                   },
                   [](const Opaque& o) {
                       if (o.tag.empty())
                           throw ValidationError("opaque factor needs a non-empty tag");
                   },
                   [](const Torus& t) {
                       if (t.level < 1)
                           throw ValidationError("torus action level must be >= 1, got " + std::to_string(t.level));
                   },
               },
               factor);
}

void validate(const RawExpr& expr)
{
    for (const auto& term : expr)
        for (const auto& f : term.factors)
            validate(f);
}

MuClass quadric_fermat_class(std::int64_t arity)
{
    if (arity < 2)
        throw ValidationError("quadric Fermat class needs arity >= 2");
    const Laurent torus = Laurent::torus();
    // B_r = constant + orbit * ORB(2); forgetting gives f_r = constant + 2 orbit.
    QuadricStep current{torus, Laurent(-2)};
    Laurent forgotten_prev(2); // fer(2, 1) = 2
    for (std::int64_t r = 2; r < arity; ++r) {
        Laurent forgotten = current.constant + current.orbit * Integer(2);
        QuadricStep next{torus * (current.constant + current.orbit * Integer(3)),
                         forgotten - torus * forgotten_prev};
        forgotten_prev = std::move(forgotten);
        current = std::move(next);
    }
    return MuClass::constant(current.constant) + MuClass::orbit(2) * current.orbit;
}

std::optional<RawExpr> apply_rule(Rule rule, const RawTerm& term)
{
    switch (rule) {
    case Rule::OrbitUnit:
        if (auto i = find_factor<Orbit>(term, [](const Orbit& o) { return o.size == 1; }))
            return RawExpr{without(term, *i, Laurent(1))};
        return std::nullopt;

    case Rule::OrbitFusion: {
        auto any = [](const Orbit&) { return true; };
        auto first = find_factor<Orbit>(term, any);
        if (!first)
            return std::nullopt;
        std::optional<std::size_t> second;
        for (std::size_t j = *first + 1; j < term.factors.size() && !second; ++j)
            if (std::holds_alternative<Orbit>(term.factors[j]))
                second = j;
        if (!second)
            return std::nullopt;
        const auto d = std::get<Orbit>(term.factors[*first]).size;
        const auto e = std::get<Orbit>(term.factors[*second]).size;
        RawTerm out{term.coefficient * Integer(std::gcd(d, e)), {}};
        for (std::size_t k = 0; k < term.factors.size(); ++k)
            if (k != *first && k != *second)
                out.factors.push_back(term.factors[k]);
        out.factors.emplace_back(Orbit{std::lcm(d, e)});
        return RawExpr{std::move(out)};
    }

    case Rule::TorusTrivialization:
        if (auto i = find_factor<Torus>(term, [](const Torus&) { return true; }))
            return RawExpr{without(term, *i, Laurent::torus())};
        return std::nullopt;

    case Rule::ConicFermat:
        if (auto i = find_factor<Fermat>(term, [](const Fermat& f) { return f.degree == 2 && f.arity == 2; }))
            return substitute(term, *i, quadric_fermat_class(2));
        return std::nullopt;

    case Rule::QuadricFermat:
        if (auto i = find_factor<Fermat>(term, [](const Fermat& f) { return f.degree == 2 && f.arity >= 3; }))
            return substitute(term, *i, quadric_fermat_class(std::get<Fermat>(term.factors[*i]).arity));
        return std::nullopt;

    case Rule::QuadricFermatTrivial:
        if (auto i = find_factor<FermatTrivial>(term,
                                                [](const FermatTrivial& f) { return f.degree == 2 && f.arity >= 2; }))
            return substitute(term, *i,
                              forget_action(quadric_fermat_class(std::get<FermatTrivial>(term.factors[*i]).arity)));
        return std::nullopt;

    case Rule::FermatLine:
        if (auto i = find_factor<FermatTrivial>(term, [](const FermatTrivial& f) { return f.arity == 1; }))
            return RawExpr{without(term, *i, Laurent(Integer(std::get<FermatTrivial>(term.factors[*i]).degree)))};
        return std::nullopt;
    }
    return std::nullopt;
}

MuClass normalize(const RawExpr& expr)
{
    return normalize(expr, kAllRules);
}

MuClass normalize(const RawExpr& expr, std::span<const Rule> priority)
{
    for (Rule r : kAllRules)
        if (std::find(priority.begin(), priority.end(), r) == priority.end())
            throw std::invalid_argument("rule priority must list every rule");
    validate(expr);

    MuClass result;
    RawExpr work(expr.rbegin(), expr.rend());
    while (!work.empty()) {
        RawTerm term = std::move(work.back());
        work.pop_back();
        if (term.coefficient.is_zero())
            continue;
        bool rewritten = false;
        for (Rule r : priority) {
            if (auto next = apply_rule(r, term)) {
                for (auto it = next->rbegin(); it != next->rend(); ++it)
                    work.push_back(std::move(*it));
                rewritten = true;
                break;
            }
        }
        if (rewritten)
            continue;
        // Irreducible: no torus, no ORB(1), at most one orbit, no FER(2, *),
        // no fer(2, r >= 2), no fer(n, 1).
        std::vector<AtomFactor> factors;
        factors.reserve(term.factors.size());
        for (const auto& f : term.factors)
            std::visit(overloaded{
                           [](const Torus&) {},
                           [&](const auto& g) { factors.emplace_back(g); },
                       },
                       f);
        result += MuClass::term(term.coefficient, Atom::from_reduced(std::move(factors)));
    }
    return result;
}

RawTerm to_raw(const Laurent& coefficient, const Atom& atom)
{
    RawTerm t{coefficient, {}};
    for (const auto& f : atom.factors())
        std::visit([&](const auto& g) { t.factors.emplace_back(g); }, f);
    return t;
}

RawExpr to_raw(const MuClass& c)
{
    RawExpr out;
    for (const auto& [atom, coeff] : c.terms())
        out.push_back(to_raw(coeff, atom));
    return out;
}

} // namespace motivic
