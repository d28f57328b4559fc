#include <doctest.h>

#include "motivic/errors.hpp"
#include "motivic/json_io.hpp"
#include "motivic/pretty.hpp"
#include "support.hpp"

using namespace motivic;
using namespace testing;
using json::Json;

namespace {

MuClass parse(const std::string& text) { return json::parse_class(json::parse_text(text)); }

} // namespace

TEST_CASE("pretty examples")
{
    CHECK(pretty(gm() + Laurent(2) * orb(2)) == "(L - 1) + 2*[mu_2]");
    CHECK(pretty(A1Class::at(BasePoint(0), lef())) == "{0 -> L}");
    CHECK(pretty(one() - orb(4)) == "1 - [mu_4]");
    CHECK(pretty(MuClass::zero()) == "0");
    CHECK(pretty(A1Class{}) == "{}");
    CHECK(pretty(lef(2) + lef()) == "L^2 + L");
    CHECK(pretty(Laurent(2) * lef(-1)) == "2*L^-1");
    CHECK(pretty(FER(3, 2)) == "[FER(3,2)]");
    CHECK(pretty(fer(3, 2)) == "[fer(3,2)]");
    CHECK(pretty(opq("psi", 2)) == "[opq:psi]");
}

TEST_CASE("class JSON")
{
    const MuClass c = parse(R"({"terms":[{"coeff":{"1":1,"0":-1},"factors":[]},{"coeff":2,"factors":[{"orb":2}]}]})");
    CHECK(c == gm() + Laurent(2) * orb(2));
    CHECK(parse(R"({"terms":[{"coeff":1,"factors":[{"orb":2},{"orb":2}]}]})") == Laurent(2) * orb(2));
    CHECK(parse(R"({"terms":[{"coeff":1,"factors":[{"FER":[2,2]}]}]})") == gm() - Laurent(2) * orb(2));
    CHECK(parse(R"({"terms":[{"coeff":1,"factors":[{"gm":2}]}]})") == gm());
    CHECK(parse(R"({"terms":[{"coeff":{"-2":3},"factors":[]}]})") == Laurent(3) * lef(-2));
    CHECK(parse(R"({"terms":[]})").is_zero());
    CHECK(parse(R"({"terms":[{"coeff":"-1267650600228229401496703205376","factors":[]}]})") ==
          Laurent(Integer(-1) * (Integer(1) << 100)) * one());
    CHECK(json::to_json(gm()).dump() == R"({"terms":[{"coeff":{"0":-1,"1":1},"factors":[]}]})");
}

TEST_CASE("malformed JSON is a parse error")
{
    CHECK_THROWS_AS(parse("{"), ParseError);
    CHECK_THROWS_AS(parse("[]"), ParseError);
    CHECK_THROWS_AS(parse(R"({"term":[]})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"terms":[{"factors":[]}]})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"terms":[{"coeff":{"x":1},"factors":[]}]})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"terms":[{"coeff":1,"factors":[{"orbit":2}]}]})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"terms":[{"coeff":1,"factors":[{"fer":[2]}]}]})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"terms":[{"coeff":1.5,"factors":[]}]})"), ParseError);
    CHECK_THROWS_AS(json::parse_epoly(json::parse_text(R"({"(1,1":1})")), ParseError);
    CHECK_THROWS_AS(json::parse_generator(json::parse_text(R"("smooth")")), ParseError);
    CHECK_THROWS_AS(parse(R"({"terms":[{"coeff":1,"factors":[{"orb":0}]}]})"), ValidationError);
}

TEST_CASE("round trips")
{
    Random rnd(101);
    for (int trial = 0; trial < 200; ++trial) {
        MuClass c = rnd.mu(true);
        if (rnd.coin())
            c += cls({Opaque{"e" + std::to_string(trial), Integer(trial), EPoly::monomial(1, 0, 3) + EPoly::monomial(0, 0, -1)}});
        const Json j = json::to_json(c);
        const MuClass back = json::parse_class(json::parse_text(j.dump()));
        CHECK(back == c);
        CHECK(json::to_json(back).dump() == j.dump());
        CHECK(pretty(back) == pretty(c));

        const A1Class f = rnd.a1(true);
        CHECK(json::parse_a1(json::parse_text(json::to_json(f).dump())) == f);
    }
}

TEST_CASE("datum and presentation round trips")
{
    const std::string datum = R"({"components":[{"id":"E1","m":1},{"id":"E2","m":1}],
        "strata":[{"I":["E1"],"base":{"terms":[{"coeff":{"1":1,"0":-1},"factors":[]}]},
                   "cover":{"terms":[{"coeff":{"1":1,"0":-1},"factors":[]}]},"locus":"regular"},
                  {"I":["E1","E2"],"base":{"terms":[{"coeff":1,"factors":[]}]},
                   "cover":{"terms":[{"coeff":1,"factors":[]}]},"locus":"singular"}],
        "fiber_regular":{"terms":[]},"fiber_singular":{"terms":[{"coeff":1,"factors":[]}]}})";
    const SNCDatum d = json::parse_datum(json::parse_text(datum));
    CHECK(d.components.size() == 2);
    CHECK(d.strata[0].locus == Locus::Regular);
    CHECK(d.strata[1].index_set == std::vector<std::string>{"E1", "E2"});
    const Json dj = json::to_json(d);
    CHECK(json::to_json(json::parse_datum(dj)).dump() == dj.dump());

    const std::string presentation = std::string(R"({"terms":[{"coeff":-1,"generator":{"resolved":{"criticals":[{"point":"3/2","datum":)") +
                                     datum + R"(}]}}},{"coeff":2,"generator":{"constant":{"value":"0","fiber_class":{"terms":[]}}}},
                                                {"coeff":5,"generator":"smooth_proper"}]})";
    const Presentation p = json::parse_presentation(json::parse_text(presentation));
    REQUIRE(p.terms.size() == 3);
    CHECK(p.terms[0].coefficient == -1);
    CHECK(std::holds_alternative<Resolved>(p.terms[0].generator));
    CHECK(std::get<Resolved>(p.terms[0].generator).criticals[0].value == BasePoint(Rational(3, 2)));
    CHECK(std::holds_alternative<Constant>(p.terms[1].generator));
    CHECK(std::holds_alternative<SmoothProper>(p.terms[2].generator));
    const Json pj = json::to_json(p);
    CHECK(json::to_json(json::parse_presentation(pj)).dump() == pj.dump());
}
