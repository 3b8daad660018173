#pragma once

#include <utility>
#include <vector>

#include "ncd/partition.hpp"

namespace ncd {

// Grassmannian with tautological sub-bundle R of rank k; Q has rank n-k.
struct GrassContext {
    int n = 0;
    int k = 0;
    GrassContext(int n_, int k_);
    int q_rank() const { return n - k; }
};

struct CohomologyOutcome {
    bool vanishes = true;
    int degree = 0;
    GLWeight weight;

    static CohomologyOutcome zero() { return {}; }
    bool operator==(const CohomologyOutcome&) const = default;
};

CohomologyOutcome dotted_sort(const GLWeight& w);
CohomologyOutcome cohomology(const GrassContext& ctx, const GLWeight& r_label, const GLWeight& q_label);

bool vanishing_filters(const Partition& lambda, const GLWeight& gamma, int s, int t, const Partition& delta);

struct GammaStep {
    GLWeight gamma;
    int t = 0;
    int degree = 0;
};

// s is the plethysm degree of lambda; t = degree + s + |gamma|
GammaStep minimal_gamma(const Partition& lambda, const GrassContext& ctx, int s = 0);
GammaStep gamma_successors(const GLWeight& gamma, const Partition& lambda, int op_index, const GrassContext& ctx,
                           int s = 0);
// all gamma reachable from minimal_gamma with gamma_1 <= q_rank
std::vector<GammaStep> enumerate_gammas(const Partition& lambda, const GrassContext& ctx, int s = 0);

}  // namespace ncd
