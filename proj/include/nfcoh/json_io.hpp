#ifndef NFCOH_JSON_IO_HPP
#define NFCOH_JSON_IO_HPP

#include <json.hpp>

#include "nfcoh/cohomology.hpp"
#include "nfcoh/kim.hpp"

namespace nfc {

using json = nlohmann::ordered_json;

json to_json(Z const & a);
json to_json(Q const & a);
/* integral-basis coordinates as decimal strings */
json to_json(FieldElement const & x);
json to_json(Ideal const & I);
json to_json(ClassGroup const & C);
json to_json(AbGroup const & A);
json to_json(CyclicExtension const & E);
json to_json(Ext1Class const & c);
json to_json(H2Class const & y);
json to_json(H3Class const & y);
json to_json(KimResult const & r);
json field_info(NumberField const & K);

Z z_from_json(json const & j);
/* a polynomial string or a coordinate list */
FieldElement element_from_json(NumberField const & K, json const & j);
Ideal ideal_from_json(NumberField const & K, json const & j);
/* {"base_poly", "n", "v"} or {"top_poly", "sigma_image"[, "base_poly", "embedding"]} */
CyclicExtension extension_from_json(json const & j);
/* the same, over an already constructed base field with the same polynomial */
CyclicExtension extension_from_json(json const & j, NumberField const & base);

}

#endif
