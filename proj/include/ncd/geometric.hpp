#ifndef NCD_GEOMETRIC_HPP
#define NCD_GEOMETRIC_HPP

#include <string>
#include <vector>

#include "ncd/ext_engine.hpp"

namespace ncd {

// S_g G (x) S_f F with an internal degree
struct BiFreeSummand {
    Partition g;
    GLWeight f;
    long long mult = 1;
    int degree = 0;
    bool operator==(const BiFreeSummand&) const = default;
};
using BiFreeTerm = std::vector<BiFreeSummand>;

// F(V)_i = sum_j H^j(Grass, wedge^{i+j}(R (x) G) (x) S_alpha Q*) for i = 0..i_max.
// Grass carries R of rank n-r and Q of rank r; m = dim G.
std::vector<BiFreeTerm> complex_terms(int m, int n, int r, const Partition& alpha, int i_max);

enum class McmKind { criterion_true, criterion_false, witness_found, no_witness_up_to };

struct McmVerdict {
    McmKind kind = McmKind::no_witness_up_to;
    // witness data
    int sym_degree = -1;
    Partition mu;
    Partition nu;
    GLWeight component;
    int coh_degree = -1;
    int bound = -1;
    // closed-form quantity behind a criterion verdict
    long long criterion_value = 0;
    std::vector<std::string> flags;

    bool mcm() const { return kind == McmKind::criterion_true || kind == McmKind::no_witness_up_to; }
};

std::string mcm_kind_name(McmKind k);

McmVerdict mcm_criterion(const FamilyConfig& cfg);

// omega_Z and top-wedge twists: R*-label c (every entry) and Q*-shift e
struct McmTwist {
    int c = 0;
    int e = 0;
};
McmTwist mcm_twist(const FamilyConfig& cfg);

// Searches H^{>0}(S_mu Q* (x) S_nu Q (x) Sym_d(bundle) (x) twist) for d <= degree_bound.
// summand_twist multiplies every tilting summand by (det Q*)^summand_twist.
// prune skips components that cannot clear the R block; turning it off is for testing.
McmVerdict mcm_witness_search(const FamilyConfig& cfg, int degree_bound, int summand_twist = 0, bool prune = true);

}  // namespace ncd

#endif
