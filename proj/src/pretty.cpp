#include "motivic/pretty.hpp"

#include <vector>

namespace motivic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// A signed summand; joined as "a + b - c".
struct Summand {
    bool negative;
    std::string body;
};

std::string join(const std::vector<Summand>& parts)
{
    if (parts.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0)
            out += parts[i].negative ? "-" : "";
        else
            out += parts[i].negative ? " - " : " + ";
        out += parts[i].body;
    }
    return out;
}

std::string power(const char* symbol, std::int64_t e)
{
    if (e == 1)
        return symbol;
    return std::string(symbol) + "^" + std::to_string(e);
}

// |c| * L^e without sign.
std::string magnitude(const Integer& c, std::int64_t e)
{
    const Integer a = abs(c);
    if (e == 0)
        return a.get_str();
    if (a == 1)
        return power("L", e);
    return a.get_str() + "*" + power("L", e);
}

} // namespace

std::string pretty(const Laurent& p)
{
    std::vector<Summand> parts;
    const auto& coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        parts.push_back({it->second < 0, magnitude(it->second, it->first)});
    return join(parts);
}

std::string pretty(const AtomFactor& f)
{
    return std::visit(overloaded{
                          [](const Orbit& o) { return "[mu_" + std::to_string(o.size) + "]"; },
                          [](const Fermat& x) {
                              return "[FER(" + std::to_string(x.degree) + "," + std::to_string(x.arity) + ")]";
                          },
                          [](const FermatTrivial& x) {
                              return "[fer(" + std::to_string(x.degree) + "," + std::to_string(x.arity) + ")]";
                          },
                          [](const Opaque& o) { return "[opq:" + o.tag + "]"; },
                      },
                      f);
}

std::string pretty(const Atom& a)
{
    if (a.is_unit())
        return "1";
    std::string out;
    for (const auto& f : a.factors())
        out += (out.empty() ? "" : "*") + pretty(f);
    return out;
}

std::string pretty(const MuClass& c)
{
    std::vector<Summand> parts;
    const bool single = c.terms().size() == 1;
    for (const auto& [atom, coeff] : c.terms()) {
        if (coeff.is_monomial()) {
            const auto& [e, k] = *coeff.coefficients().begin();
            std::string body;
            if (atom.is_unit())
                body = magnitude(k, e);
            else if (abs(k) == 1 && e == 0)
                body = pretty(atom);
            else
                body = magnitude(k, e) + "*" + pretty(atom);
            parts.push_back({k < 0, body});
        } else if (atom.is_unit()) {
            parts.push_back({false, single ? pretty(coeff) : "(" + pretty(coeff) + ")"});
        } else {
            parts.push_back({false, "(" + pretty(coeff) + ")*" + pretty(atom)});
        }
    }
    return join(parts);
}

std::string pretty(const A1Class& f)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [point, c] : f.support()) {
        out += (first ? "" : ", ") + point.to_string() + " -> " + pretty(c);
        first = false;
    }
    return out + "}";
}

std::string pretty(const EPoly& e)
{
    std::vector<Summand> parts;
    const auto& coeffs = e.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const auto& [m, k] = *it;
        std::string mono;
        if (m.first != 0)
            mono += power("u", m.first);
        if (m.second != 0)
            mono += (mono.empty() ? "" : "*") + power("v", m.second);
        const Integer a = abs(k);
        std::string body = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
        parts.push_back({k < 0, body});
    }
    return join(parts);
}

} // namespace motivic
