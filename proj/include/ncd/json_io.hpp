#ifndef NCD_JSON_IO_HPP
#define NCD_JSON_IO_HPP

#include <json.hpp>

#include "ncd/bott.hpp"
#include "ncd/ext_engine.hpp"
#include "ncd/gl_characters.hpp"

namespace ncd {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const GLWeight& w);
json to_json(const IrrepDecomposition& d);
json to_json(const GradedDecomposition& g);
json to_json(const CohomologyOutcome& c);

Partition partition_from_json(const json& j);
GLWeight weight_from_json(const json& j);
IrrepDecomposition decomposition_from_json(const json& j);

// exact big integers go out as decimal strings once they leave the 64-bit range
json big_to_json(const BigInt& v);

}  // namespace ncd

#endif
