#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncd/bott.hpp"
#include "ncd/gl_characters.hpp"

namespace ncd {

enum class Family { symmetric, skew, tensor_antisym, tensor_sym, kapranov, custom };

struct FamilyConfig {
    Family family = Family::symmetric;
    int n = 0;
    int r = 0;  // Q-rank
    int d = 0;
    Partition delta;

    static FamilyConfig symmetric(int n, int r);
    static FamilyConfig skew(int n, int r);
    static FamilyConfig tensor_antisym(int n, int d);
    static FamilyConfig tensor_sym(int n, int d);
    static FamilyConfig kapranov(int n, int r);
    static FamilyConfig custom(int n, int r, Partition delta);

    int q_rank() const { return r; }
    int r_rank() const { return n - r; }
    bool has_bundle() const { return family != Family::kapranov; }
    std::vector<Partition> vertices() const;
    GrassContext grass() const { return GrassContext(n, n - r); }
};

std::string family_name(Family f);
Family parse_family(const std::string& s);

using GradedDecomposition = std::map<int, IrrepDecomposition>;

// s-th layer of the Koszul factor, as a decomposition over GL(Q-rank)
const IrrepDecomposition& koszul_layer(const FamilyConfig& cfg, int s);

// Sym_d of the bundle S_delta Q, as a GL(Q-rank) decomposition over partitions
const IrrepDecomposition& sym_bundle_layer(const FamilyConfig& cfg, int d);

GradedDecomposition ext_simples(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta, int t_max = 2);

IrrepDecomposition ext1_closed(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta);
IrrepDecomposition ext2_closed(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta);

// dominant length-k weights with entries in [-(n-k), n-k]
std::vector<GLWeight> brute_gamma_candidates(const GrassContext& ctx);

}  // namespace ncd
