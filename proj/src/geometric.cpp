#include "ncd/geometric.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncd {

std::vector<BiFreeTerm> complex_terms(int m, int n, int r, const Partition& alpha, int i_max) {
    if (m < 0 || n < 1 || r < 0 || r > n) throw std::invalid_argument("complex_terms needs m >= 0 and 0 <= r <= n");
    if (!fits(alpha, r, n - r)) throw std::invalid_argument("alpha must fit in an r x (n-r) box");
    if (i_max < 0) throw std::invalid_argument("i_max must be nonnegative");
    const int k = n - r;
    const GrassContext ctx(n, k);
    const GLWeight q_label(alpha.padded(r));
    const int top = r * k;
    std::vector<BiFreeTerm> out(i_max + 1);
    for (int i = 0; i <= i_max; ++i)
        for (int j = 0; j <= top; ++j)
            // wedge^{i+j}(R (x) G) = sum S_{mu'}G (x) S_mu R
            for (const auto& mu : partitions_of(i + j, k, m)) {
                auto res = cohomology(ctx, GLWeight(mu.padded(k)).dual(), q_label);
                if (res.vanishes || res.degree != j) continue;
                out[i].push_back({transpose(mu), res.weight, 1, i + j});
            }
    return out;
}

std::string mcm_kind_name(McmKind k) {
    switch (k) {
        case McmKind::criterion_true: return "criterion_true";
        case McmKind::criterion_false: return "criterion_false";
        case McmKind::witness_found: return "witness_found";
        case McmKind::no_witness_up_to: return "no_witness_up_to";
    }
    return "?";
}

namespace {

long long binom(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    long long v = 1;
    for (int i = 1; i <= b; ++i) v = v * (a - b + i) / i;
    return v;
}

McmVerdict verdict(bool ok, long long value) {
    McmVerdict v;
    v.kind = ok ? McmKind::criterion_true : McmKind::criterion_false;
    v.criterion_value = value;
    return v;
}

}  // namespace

McmVerdict mcm_criterion(const FamilyConfig& cfg) {
    const int n = cfg.n, r = cfg.r, d = cfg.d;
    switch (cfg.family) {
        case Family::symmetric: {
            auto v = verdict(r >= n - 1, r - (n - 1));
            if (r == n) v.flags.push_back("r = n: the base is a point and Z is the whole space");
            return v;
        }
        case Family::skew: {
            auto v = verdict(r == n, r - n);
            if (r == n) v.flags.push_back("r = n: the base is a point and Z is the whole space");
            return v;
        }
        case Family::tensor_antisym: {
            // exponent of det Q in the twisted bundle; nonnegative iff no higher cohomology
            const long long value = binom(n - 2, d - 1) - n;
            auto v = verdict(value >= 0, value);
            if ((value >= 0) != (value - 1 >= 0))
                v.flags.push_back("boundary: binomial(n-2,d-1) - n - 1 = -1 here, the remark's range says MCM");
            return v;
        }
        case Family::tensor_sym: {
            const long long value = binom(n + d - 1, n - 1) - n - 1;
            auto v = verdict(value >= 0, value);
            if (d == 1) v.flags.push_back("boundary: d = 1 is the linear case");
            if (n <= 1) v.flags.push_back("boundary: n = 1");
            return v;
        }
        default:
            throw std::invalid_argument("mcm_criterion: unsupported family " + family_name(cfg.family));
    }
}

McmTwist mcm_twist(const FamilyConfig& cfg) {
    const int n = cfg.n, r = cfg.r, d = cfg.d;
    switch (cfg.family) {
        // omega_Z = (det E*)^{r-n-1} (x) (det Q*)^{n-r-1}; the E-part is a global shift
        case Family::symmetric: return {0, n - r - 1};
        // omega_Z = (det E*)^{r-n+1} (x) (det Q*)^{n-r+1}
        case Family::skew: return {0, n - r + 1};
        // omega_Grass = det Q* (x) R^{n-1}, xi = R (x) wedge^{d-1} Q
        case Family::tensor_antisym:
            return {static_cast<int>(binom(n - 1, d - 1)) - (n - 1), 1 + static_cast<int>(binom(n - 2, d - 2))};
        // xi = R (x) S_{d-1} E
        case Family::tensor_sym: return {static_cast<int>(binom(n + d - 2, d - 1)) - (n - 1), 1};
        default:
            throw std::invalid_argument("mcm_twist: unsupported family " + family_name(cfg.family));
    }
}

McmVerdict mcm_witness_search(const FamilyConfig& cfg, int degree_bound, int summand_twist, bool prune) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    const McmTwist tw = mcm_twist(cfg);
    const int r = cfg.q_rank();
    const int k = cfg.r_rank();
    McmVerdict none;
    none.kind = McmKind::no_witness_up_to;
    none.bound = degree_bound;
    if (k == 0 && prune) {
        // every Q-only weight is dominant
        none.flags.push_back("r = n: the base is a point");
        return none;
    }
    const GrassContext ctx = cfg.grass();
    const GLWeight r_label(std::vector<int>(k, tw.c));
    const auto verts = cfg.vertices();
    // Q entries must clear every R entry: xi_1 >= c + k + 1
    const int need = tw.c + k + 1;

    struct Pair {
        const Partition* mu;
        const Partition* nu;
        IrrepDecomposition prod;
        int slack;
    };
    std::vector<Pair> pairs;
    int max_slack = -1;
    for (const auto& mu : verts)
        for (const auto& nu : verts) {
            GLWeight a = GLWeight(mu.padded(r)).shifted(summand_twist);
            GLWeight b = GLWeight(nu.padded(r)).dual().shifted(-summand_twist);
            const int slack = a[0] + b[0] + tw.e - need;
            pairs.push_back({&mu, &nu, tensor_dominant(a, b, r), slack});
            max_slack = std::max(max_slack, slack);
        }

    for (int d = 0; d <= degree_bound; ++d) {
        // kappa_r >= 0, so a negative slack rules out the whole layer
        if (prune && max_slack < 0) break;
        const auto& layer = sym_bundle_layer(cfg, d);
        for (const auto& p : pairs) {
            if (prune && p.slack < 0) continue;
            for (const auto& [kappa, km] : layer.terms) {
                if (prune && kappa[r - 1] > p.slack) continue;
                auto prod = tensor_dominant(p.prod, kappa.dual());
                for (const auto& [zeta, zm] : prod.terms) {
                    const GLWeight xi = zeta.shifted(tw.e);
                    if (prune && xi[0] < need) continue;
                    auto res = cohomology(ctx, r_label, xi);
                    if (res.vanishes || res.degree == 0) continue;
                    McmVerdict w;
                    w.kind = McmKind::witness_found;
                    w.sym_degree = d;
                    w.mu = *p.mu;
                    w.nu = *p.nu;
                    w.component = res.weight;
                    w.coh_degree = res.degree;
                    w.bound = degree_bound;
                    return w;
                }
            }
        }
    }
    return none;
}

}  // namespace ncd
