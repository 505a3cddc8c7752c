#pragma once
//
// JSON (de)serialization for the core value types.  Schemas:
//   element   {"t": [ints], "p": "one-line perm"}
//   spec      {"family": "L3", "n": 4, "params": [ints]}
//   word      [signed generator indices], e.g. [1, -2, 3]
// Integers are emitted as JSON numbers; values beyond 64 bits throw, which
// desk-scale inputs never reach.
//
#include "artin/affine.hpp"
#include "artin/families.hpp"
#include "artin/word.hpp"

#include <json.hpp>

namespace artin {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json elem_to_json(const AffInt& e);
AffInt elem_from_json(const Json& j);

Json spec_to_json(const MorphismSpec& spec);
MorphismSpec spec_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json matrix_to_json(const std::vector<std::vector<Int>>& m);

}  // namespace artin
