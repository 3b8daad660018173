#pragma once

#include <string>
#include <vector>

#include "ncd/ext_engine.hpp"
#include "ncd/json_io.hpp"

namespace ncd {

// An arrow or a relation slot. Relations are stored as labelled
// sub-representations of Hom(src, dst), not as explicit path combinations.
struct QuiverEdge {
    int src = 0;
    int dst = 0;
    GLWeight label;
    long long mult = 1;
    std::string name;

    bool operator==(const QuiverEdge&) const = default;
};

struct EquivariantQuiver {
    std::string family;
    int n = 0;
    std::vector<Partition> vertices;
    std::vector<QuiverEdge> arrows;
    std::vector<QuiverEdge> relations;
    std::vector<std::string> notes;

    int index_of(const Partition& p) const;
    // (label -> mult) between two vertices, summed over edges
    IrrepDecomposition arrow_labels(int src, int dst) const;
    IrrepDecomposition relation_labels(int src, int dst) const;
};

// "beilinson" {n}, "kapranov" {r, n}, "sym_maxminor" {n},
// "rational_curve" {n, d}, "wedge_rank" {n, d}
EquivariantQuiver build_named(const std::string& name, const std::vector<int>& params);

EquivariantQuiver quiver_from_ext(const FamilyConfig& cfg);

// human label of a polynomial GL_n irrep: C, E, wedge powers, S_d, S_(..)
std::string irrep_label(const GLWeight& w);

enum class QuiverFormat { json, dot, text };
std::string emit(const EquivariantQuiver& q, QuiverFormat fmt);
json quiver_to_json(const EquivariantQuiver& q);
EquivariantQuiver quiver_from_json(const json& j);

}  // namespace ncd
