#include "motivic/json_io.hpp"

#include <charconv>
#include <cstdio>

#include "motivic/errors.hpp"

namespace motivic::json {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

const Json& field(const Json& j, const char* key, const char* context)
{
    if (!j.is_object())
        throw ParseError(std::string(context) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(context) + " is missing \"" + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const char* context)
{
    const Json& a = field(j, key, context);
    if (!a.is_array())
        throw ParseError(std::string(context) + " field \"" + key + "\" must be an array");
    return a;
}

std::int64_t parse_small(const Json& j, const char* context)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(context) + " must be an integer");
    return j.get<std::int64_t>();
}

std::string parse_string(const Json& j, const char* context)
{
    if (!j.is_string())
        throw ParseError(std::string(context) + " must be a string");
    return j.get<std::string>();
}

std::pair<std::int64_t, std::int64_t> parse_pair(const Json& j, const char* context)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(context) + " must be a two-element array [n, r]");
    return {parse_small(j[0], context), parse_small(j[1], context)};
}

std::int64_t parse_exponent(const std::string& key)
{
    std::int64_t e = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(first, last, e);
    if (ec != std::errc() || ptr != last || key.empty())
        throw ParseError("Laurent exponent key must be a decimal integer, got \"" + key + "\"");
    return e;
}

RawFactor parse_factor(const Json& j)
{
    if (!j.is_object() || j.size() != 1)
        throw ParseError("factor must be an object with exactly one key");
    const auto& [key, value] = *j.items().begin();
    if (key == "orb")
        return Orbit{parse_small(value, "orb")};
    if (key == "gm")
        return Torus{parse_small(value, "gm")};
    if (key == "fer") {
        auto [n, r] = parse_pair(value, "fer");
        return FermatTrivial{n, r};
    }
    if (key == "FER") {
        auto [n, r] = parse_pair(value, "FER");
        return Fermat{n, r};
    }
    if (key == "opq") {
        Opaque o{parse_string(field(value, "tag", "opq"), "opq tag"), parse_integer(field(value, "chi", "opq")),
                 std::nullopt};
        if (value.contains("epoly"))
            o.epoly = parse_epoly(value["epoly"]);
        return o;
    }
    throw ParseError("unknown factor kind \"" + key + "\"");
}

BasePoint parse_point(const Json& j)
{
    if (j.is_number_integer())
        return BasePoint(Rational(Integer(j.dump())));
    if (j.is_string())
        return BasePoint::parse(j.get<std::string>());
    throw ParseError("base point must be an integer or a \"p/q\" string");
}

Locus parse_locus(const Json& j)
{
    const std::string s = parse_string(j, "locus");
    if (s == "regular")
        return Locus::Regular;
    if (s == "singular")
        return Locus::Singular;
    throw ParseError("locus must be \"regular\" or \"singular\", got \"" + s + "\"");
}

} // namespace

Json to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

Integer parse_integer(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.dump());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const Laurent& p)
{
    Json out = Json::object();
    for (const auto& [e, c] : p.coefficients())
        out[std::to_string(e)] = to_json(c);
    return out;
}

Laurent parse_laurent(const Json& j)
{
    if (j.is_number_integer() || j.is_string())
        return Laurent(parse_integer(j));
    if (!j.is_object())
        throw ParseError("coefficient must be an object {\"<exp>\": <int>} or an integer");
    Laurent p;
    for (const auto& [key, value] : j.items())
        p += Laurent::monomial(parse_exponent(key), parse_integer(value));
    return p;
}

Json to_json(const EPoly& e)
{
    Json out = Json::object();
    for (const auto& [m, c] : e.coefficients())
        out["(" + std::to_string(m.first) + "," + std::to_string(m.second) + ")"] = to_json(c);
    return out;
}

EPoly parse_epoly(const Json& j)
{
    if (!j.is_object())
        throw ParseError("E-polynomial must be an object {\"(i,j)\": <int>}");
    EPoly e;
    for (const auto& [key, value] : j.items()) {
        long long i = 0, k = 0;
        char tail = 0;
        if (std::sscanf(key.c_str(), "(%lld,%lld)%c", &i, &k, &tail) != 2 || key.back() != ')')
            throw ParseError("E-polynomial key must look like \"(i,j)\", got \"" + key + "\"");
        e += EPoly::monomial(i, k, parse_integer(value));
    }
    return e;
}

Json to_json(const AtomFactor& f)
{
    return std::visit(overloaded{
                          [](const Orbit& o) { return Json{{"orb", o.size}}; },
                          [](const Fermat& x) { return Json{{"FER", {x.degree, x.arity}}}; },
                          [](const FermatTrivial& x) { return Json{{"fer", {x.degree, x.arity}}}; },
                          [](const Opaque& o) {
                              Json body{{"tag", o.tag}, {"chi", to_json(o.chi)}};
                              if (o.epoly)
                                  body["epoly"] = to_json(*o.epoly);
                              return Json{{"opq", body}};
                          },
                      },
                      f);
}

Json to_json(const MuClass& c)
{
    Json terms = Json::array();
    for (const auto& [atom, coeff] : c.terms()) {
        Json factors = Json::array();
        for (const auto& f : atom.factors())
            factors.push_back(to_json(f));
        terms.push_back(Json{{"coeff", to_json(coeff)}, {"factors", factors}});
    }
    return Json{{"terms", terms}};
}

RawExpr parse_raw_class(const Json& j)
{
    RawExpr expr;
    for (const auto& t : array_field(j, "terms", "class")) {
        RawTerm term{parse_laurent(field(t, "coeff", "class term")), {}};
        if (t.contains("factors")) {
            const Json& factors = t["factors"];
            if (!factors.is_array())
                throw ParseError("class term field \"factors\" must be an array");
            for (const auto& f : factors)
                term.factors.push_back(parse_factor(f));
        }
        expr.push_back(std::move(term));
    }
    return expr;
}

MuClass parse_class(const Json& j)
{
    return normalize(parse_raw_class(j));
}

Json to_json(const A1Class& f)
{
    Json support = Json::array();
    for (const auto& [point, c] : f.support())
        support.push_back(Json{{"point", point.to_string()}, {"class", to_json(c)}});
    return Json{{"support", support}};
}

A1Class parse_a1(const Json& j)
{
    A1Class f;
    for (const auto& entry : array_field(j, "support", "a1 class"))
        f += A1Class::at(parse_point(field(entry, "point", "support entry")),
                         parse_class(field(entry, "class", "support entry")));
    return f;
}

Json to_json(const SNCDatum& d)
{
    Json components = Json::array();
    for (const auto& c : d.components)
        components.push_back(Json{{"id", c.id}, {"m", c.multiplicity}});
    Json strata = Json::array();
    for (const auto& s : d.strata)
        strata.push_back(Json{{"I", s.index_set},
                              {"base", to_json(s.base)},
                              {"cover", to_json(s.cover)},
                              {"locus", s.locus == Locus::Regular ? "regular" : "singular"}});
    return Json{{"components", components},
                {"strata", strata},
                {"fiber_regular", to_json(d.fiber_regular)},
                {"fiber_singular", to_json(d.fiber_singular)}};
}

SNCDatum parse_datum(const Json& j)
{
    SNCDatum d;
    for (const auto& c : array_field(j, "components", "datum"))
        d.components.push_back(
            {parse_string(field(c, "id", "component"), "component id"), parse_small(field(c, "m", "component"), "m")});
    for (const auto& s : array_field(j, "strata", "datum")) {
        Stratum st;
        for (const auto& id : array_field(s, "I", "stratum"))
            st.index_set.push_back(parse_string(id, "stratum component id"));
        st.base = parse_class(field(s, "base", "stratum"));
        st.cover = parse_class(field(s, "cover", "stratum"));
        st.locus = parse_locus(field(s, "locus", "stratum"));
        d.strata.push_back(std::move(st));
    }
    d.fiber_regular = parse_class(field(j, "fiber_regular", "datum"));
    d.fiber_singular = parse_class(field(j, "fiber_singular", "datum"));
    return d;
}

Json to_json(const Generator& g)
{
    return std::visit(overloaded{
                          [](const Resolved& r) {
                              Json criticals = Json::array();
                              for (const auto& c : r.criticals)
                                  criticals.push_back(Json{{"point", c.value.to_string()}, {"datum", to_json(c.datum)}});
                              return Json{{"resolved", {{"criticals", criticals}}}};
                          },
                          [](const Constant& c) {
                              return Json{{"constant",
                                           {{"value", c.value.to_string()}, {"fiber_class", to_json(c.fiber_class)}}}};
                          },
                          [](const SmoothProper&) { return Json("smooth_proper"); },
                      },
                      g);
}

Generator parse_generator(const Json& j)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "smooth_proper")
            return SmoothProper{};
        throw ParseError("unknown generator \"" + j.get<std::string>() + "\"");
    }
    if (!j.is_object() || j.size() != 1)
        throw ParseError("generator must be \"smooth_proper\" or an object with one key");
    if (j.contains("resolved")) {
        Resolved r;
        for (const auto& c : array_field(j["resolved"], "criticals", "resolved generator"))
            r.criticals.push_back(
                {parse_point(field(c, "point", "critical")), parse_datum(field(c, "datum", "critical"))});
        return r;
    }
    if (j.contains("constant")) {
        const Json& c = j["constant"];
        return Constant{parse_point(field(c, "value", "constant generator")),
                        parse_class(field(c, "fiber_class", "constant generator"))};
    }
    if (j.contains("smooth_proper"))
        return SmoothProper{};
    throw ParseError("unknown generator kind \"" + j.items().begin().key() + "\"");
}

Json to_json(const Presentation& p)
{
    Json terms = Json::array();
    for (const auto& t : p.terms)
        terms.push_back(Json{{"coeff", to_json(t.coefficient)}, {"generator", to_json(t.generator)}});
    return Json{{"terms", terms}};
}

Presentation parse_presentation(const Json& j)
{
    Presentation p;
    for (const auto& t : array_field(j, "terms", "presentation"))
        p.terms.push_back({parse_integer(field(t, "coeff", "presentation term")),
                           parse_generator(field(t, "generator", "presentation term"))});
    return p;
}

Json to_json(const VanishingCycles& v)
{
    return Json{{"phi", to_json(v.phi)}, {"phi_regular", to_json(v.phi_regular)}};
}

Json to_json(const AssocReport& r)
{
    Json symbolic;
    switch (r.symbolic) {
    case SymbolicVerdict::Equal: symbolic = true; break;
    case SymbolicVerdict::Different: symbolic = false; break;
    case SymbolicVerdict::SkippedOpaque: symbolic = "skipped-opaque"; break;
    }
    return Json{{"symbolic", symbolic},
                {"chi_consistent", r.chi_consistent},
                {"chi", {to_json(r.chi_left), to_json(r.chi_right)}},
                {"left", to_json(r.left_fold)},
                {"right", to_json(r.right_fold)}};
}

Json to_json(const ThomSebastianiReport& r)
{
    Json points = Json::array();
    for (const auto& p : r.points)
        points.push_back(Json{{"point", p.point.to_string()},
                              {"equal", p.equal},
                              {"convolved", to_json(p.convolved)},
                              {"direct", to_json(p.direct)}});
    return Json{{"equal", r.equal},
                {"points", points},
                {"convolved", to_json(r.convolved)},
                {"direct", to_json(r.direct)}};
}

Json parse_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace motivic::json
