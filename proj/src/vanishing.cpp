#include "motivic/vanishing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "motivic/convolution.hpp"
#include "motivic/errors.hpp"
#include "motivic/realizations.hpp"

namespace motivic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string describe(const Stratum& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.index_set.size(); ++i)
        out += (i ? "," : "") + s.index_set[i];
    return out + "}";
}

void require_valid(const SNCDatum& d)
{
    const auto issues = validate_datum(d);
    if (!issues.empty())
        throw ValidationError("invalid SNC datum: " + issues.front());
}

} // namespace

std::int64_t stratum_multiplicity(const SNCDatum& d, const Stratum& s)
{
    std::int64_t m = 0;
    for (const auto& id : s.index_set) {
        auto it = std::find_if(d.components.begin(), d.components.end(),
                               [&](const Component& c) { return c.id == id; });
        if (it == d.components.end())
            throw ValidationError("stratum " + describe(s) + " names undeclared component '" + id + "'");
        m = std::gcd(m, it->multiplicity);
    }
    return m;
}

std::vector<std::string> validate_datum(const SNCDatum& d)
{
    std::vector<std::string> issues;
    std::set<std::string> ids;
    for (const auto& c : d.components) {
        if (!ids.insert(c.id).second)
            issues.push_back("component id '" + c.id + "' declared twice");
        if (c.multiplicity < 1)
            issues.push_back("component '" + c.id + "' has multiplicity " + std::to_string(c.multiplicity) +
                             " < 1");
    }
    if (!d.fiber_regular.is_trivial_action())
        issues.push_back("fiber_regular must carry the trivial action");
    if (!d.fiber_singular.is_trivial_action())
        issues.push_back("fiber_singular must carry the trivial action");

    std::set<std::vector<std::string>> seen;
    for (const auto& s : d.strata) {
        const std::string name = describe(s);
        if (s.index_set.empty()) {
            issues.push_back("stratum with empty index set");
            continue;
        }
        std::vector<std::string> sorted = s.index_set;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            issues.push_back("stratum " + name + " repeats a component");
        if (!seen.insert(sorted).second)
            issues.push_back("stratum " + name + " listed twice");
        bool declared = true;
        for (const auto& id : s.index_set)
            if (!ids.count(id)) {
                issues.push_back("stratum " + name + " names undeclared component '" + id + "'");
                declared = false;
            }
        if (s.index_set.size() >= 2 && s.locus != Locus::Singular)
            issues.push_back("stratum " + name + " meets several components and must lie in the singular locus");
        if (!s.base.is_trivial_action())
            issues.push_back("stratum " + name + " base class must carry the trivial action");
        if (!declared)
            continue;
        const std::int64_t m = stratum_multiplicity(d, s);
        if (chi_c(s.cover) != chi_c(s.base) * m)
            issues.push_back("stratum " + name + ": chi_c(cover) = " + chi_c(s.cover).get_str() + " but m_I * chi_c(base) = " +
                             Integer(chi_c(s.base) * m).get_str());
        if (m == 1 && !(s.cover == s.base))
            issues.push_back("stratum " + name + " has m_I = 1 but cover differs from base");
    }
    return issues;
}

MuClass nearby_fiber(const SNCDatum& d)
{
    require_valid(d);
    const Laurent one_minus_l = Laurent(1) - Laurent::monomial(1);
    MuClass psi;
    for (const auto& s : d.strata)
        psi += s.cover * one_minus_l.pow(static_cast<unsigned>(s.index_set.size() - 1));
    return psi;
}

VanishingCycles vanishing_cycles(const SNCDatum& d)
{
    require_valid(d);
    const Laurent one_minus_l = Laurent(1) - Laurent::monomial(1);
    VanishingCycles out{d.fiber_singular, d.fiber_regular};
    for (const auto& s : d.strata) {
        MuClass contribution = s.cover * one_minus_l.pow(static_cast<unsigned>(s.index_set.size() - 1));
        (s.locus == Locus::Singular ? out.phi : out.phi_regular) -= contribution;
    }
    return out;
}

void validate_generator(const Generator& g)
{
    std::visit(overloaded{
                   [](const Resolved& r) {
                       std::set<BasePoint> points;
                       for (const auto& c : r.criticals) {
                           if (!points.insert(c.value).second)
                               throw ValidationError("critical value " + c.value.to_string() + " listed twice");
                           require_valid(c.datum);
                       }
                   },
                   [](const Constant& c) {
                       if (!c.fiber_class.is_trivial_action())
                           throw ValidationError("constant generator fiber class must carry the trivial action");
                   },
                   [](const SmoothProper&) {},
               },
               g);
}

A1Class phi_generator(const Generator& g)
{
    validate_generator(g);
    return std::visit(overloaded{
                          [](const Resolved& r) {
                              A1Class out;
                              for (const auto& c : r.criticals)
                                  out += A1Class::at(c.value, vanishing_cycles(c.datum).phi);
                              return out;
                          },
                          [](const Constant& c) { return A1Class::at(c.value, c.fiber_class); },
                          [](const SmoothProper&) { return A1Class(); },
                      },
                      g);
}

A1Class phi_measure(const Presentation& p)
{
    A1Class total;
    for (const auto& term : p.terms)
        total += phi_generator(term.generator) * Laurent(term.coefficient);
    return total;
}

ThomSebastianiReport ts_check(const Generator& v, const Generator& w, const Generator& direct)
{
    ThomSebastianiReport report;
    report.convolved = a1_star(phi_generator(v), phi_generator(w));
    report.direct = phi_generator(direct);
    std::set<BasePoint> points;
    for (const auto& [p, c] : report.convolved.support())
        points.insert(p);
    for (const auto& [p, c] : report.direct.support())
        points.insert(p);
    report.equal = true;
    for (const auto& p : points) {
        PointComparison cmp{p, report.convolved.fiber(p), report.direct.fiber(p), false};
        cmp.equal = cmp.convolved == cmp.direct;
        report.equal = report.equal && cmp.equal;
        report.points.push_back(std::move(cmp));
    }
    return report;
}

} // namespace motivic
