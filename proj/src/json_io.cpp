#include "ncd/json_io.hpp"

#include <limits>

namespace ncd {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const GLWeight& w) { return json{{"rank", w.rank()}, {"entries", w.entries()}}; }

json to_json(const IrrepDecomposition& d) {
    json terms = json::array();
    for (const auto& [w, m] : d.terms) terms.push_back({{"weight", w.entries()}, {"mult", m}});
    return json{{"rank", d.rank}, {"terms", terms}};
}

json to_json(const GradedDecomposition& g) {
    json layers = json::array();
    for (const auto& [t, d] : g) {
        if (d.empty()) continue;
        json layer = to_json(d);
        layer["t"] = t;
        layers.push_back(layer);
    }
    return json{{"framing", "E"}, {"layers", layers}};
}

json to_json(const CohomologyOutcome& c) {
    if (c.vanishes) return json{{"vanishes", true}};
    return json{{"vanishes", false}, {"degree", c.degree}, {"weight", c.weight.entries()}};
}

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

GLWeight weight_from_json(const json& j) {
    if (j.is_array()) return GLWeight(j.get<std::vector<int>>());
    return GLWeight(j.at("entries").get<std::vector<int>>());
}

IrrepDecomposition decomposition_from_json(const json& j) {
    IrrepDecomposition d(j.at("rank").get<int>());
    for (const auto& t : j.at("terms")) d.add(GLWeight(t.at("weight").get<std::vector<int>>()), t.at("mult").get<long long>());
    return d;
}

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

}  // namespace ncd
