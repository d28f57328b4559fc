#pragma once

#include <json.hpp>

#include "motivic/a1_class.hpp"
#include "motivic/convolution.hpp"
#include "motivic/epoly.hpp"
#include "motivic/mu_class.hpp"
#include "motivic/normalize.hpp"
#include "motivic/vanishing.hpp"

// JSON interchange formats. Parsers throw ParseError on schema mismatches;
// class parsers additionally normalize and so may throw ValidationError.
// Integers are written as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise; both spellings are accepted on input.
//
//   class         {"terms":[{"coeff":{"<exp>":<int>,...},"factors":[<factor>,...]}]}
//   factor        {"orb":d} | {"fer":[n,r]} | {"FER":[n,r]} | {"gm":level}
//                 | {"opq":{"tag":s,"chi":z[,"epoly":<epoly>]}}
//   epoly         {"(i,j)":<int>,...}
//   a1 class      {"support":[{"point":"p/q","class":<class>},...]}
//   snc datum     {"components":[{"id":s,"m":k}],"strata":[{"I":[s,...],"base":<class>,
//                  "cover":<class>,"locus":"regular"|"singular"}],
//                  "fiber_regular":<class>,"fiber_singular":<class>}
//   generator     {"resolved":{"criticals":[{"point":"a","datum":<snc datum>}]}}
//                 | {"constant":{"value":"a","fiber_class":<class>}} | "smooth_proper"
//   presentation  {"terms":[{"coeff":<int>,"generator":<generator>}]}
namespace motivic::json {

using Json = nlohmann::json;

Json to_json(const Integer& z);
Integer parse_integer(const Json& j);

Json to_json(const Laurent& p);
Laurent parse_laurent(const Json& j);

Json to_json(const EPoly& e);
EPoly parse_epoly(const Json& j);

Json to_json(const AtomFactor& f);
Json to_json(const MuClass& c);
RawExpr parse_raw_class(const Json& j);
MuClass parse_class(const Json& j);

Json to_json(const A1Class& f);
A1Class parse_a1(const Json& j);

Json to_json(const SNCDatum& d);
SNCDatum parse_datum(const Json& j);

Json to_json(const Generator& g);
Generator parse_generator(const Json& j);

Json to_json(const Presentation& p);
Presentation parse_presentation(const Json& j);

Json to_json(const VanishingCycles& v);
Json to_json(const AssocReport& r);
Json to_json(const ThomSebastianiReport& r);

// Parses text, mapping syntax errors to ParseError.
Json parse_text(const std::string& text);

} // namespace motivic::json
