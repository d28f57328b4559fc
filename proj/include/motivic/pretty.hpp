#pragma once

#include <string>

#include "motivic/a1_class.hpp"
#include "motivic/atom.hpp"
#include "motivic/epoly.hpp"
#include "motivic/laurent.hpp"
#include "motivic/mu_class.hpp"

namespace motivic {

// Human-readable, output-only notation:
//   (L - 1) + 2*[mu_2]     1 - [mu_4]     {0 -> L, 3/2 -> [fer(3,2)]}
std::string pretty(const Laurent& p);
std::string pretty(const AtomFactor& f);
std::string pretty(const Atom& a);
std::string pretty(const MuClass& c);
std::string pretty(const A1Class& f);
std::string pretty(const EPoly& e);

} // namespace motivic
