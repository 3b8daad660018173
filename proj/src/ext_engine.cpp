#include "ncd/ext_engine.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ncd {

FamilyConfig FamilyConfig::symmetric(int n, int r) {
    if (r <= 0 || r > n) throw std::invalid_argument("symmetric family needs 0 < r <= n");
    return {Family::symmetric, n, r, 2, Partition{2}};
}

FamilyConfig FamilyConfig::skew(int n, int r) {
    if (r <= 0 || r > n) throw std::invalid_argument("skew family needs 0 < r <= n");
    return {Family::skew, n, r, 2, Partition{1, 1}};
}

FamilyConfig FamilyConfig::tensor_antisym(int n, int d) {
    if (n < 2 || d < 1) throw std::invalid_argument("tensor_antisym needs n >= 2 and d >= 1");
    return {Family::tensor_antisym, n, n - 1, d, Partition(std::vector<int>(d, 1))};
}

FamilyConfig FamilyConfig::tensor_sym(int n, int d) {
    if (n < 2 || d < 1) throw std::invalid_argument("tensor_sym needs n >= 2 and d >= 1");
    return {Family::tensor_sym, n, n - 1, d, Partition{d}};
}

FamilyConfig FamilyConfig::kapranov(int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("kapranov family needs 0 <= r <= n");
    return {Family::kapranov, n, r, 0, Partition{}};
}

FamilyConfig FamilyConfig::custom(int n, int r, Partition delta) {
    if (r <= 0 || r > n) throw std::invalid_argument("custom family needs 0 < r <= n");
    if (delta.empty()) throw std::invalid_argument("custom family needs a nonempty delta");
    return {Family::custom, n, r, delta.area(), std::move(delta)};
}

std::vector<Partition> FamilyConfig::vertices() const { return enumerate_box(r, n - r); }

std::string family_name(Family f) {
    switch (f) {
        case Family::symmetric: return "sym";
        case Family::skew: return "skew";
        case Family::tensor_antisym: return "tensor_antisym";
        case Family::tensor_sym: return "tensor_sym";
        case Family::kapranov: return "kapranov";
        case Family::custom: return "custom";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "sym" || s == "symmetric") return Family::symmetric;
    if (s == "skew") return Family::skew;
    if (s == "tensor_antisym" || s == "tensor-antisym") return Family::tensor_antisym;
    if (s == "tensor_sym" || s == "tensor-sym") return Family::tensor_sym;
    if (s == "kapranov") return Family::kapranov;
    if (s == "custom") return Family::custom;
    throw std::invalid_argument("unknown family '" + s + "'");
}

const IrrepDecomposition& koszul_layer(const FamilyConfig& cfg, int s) {
    static std::mutex mu;
    static std::map<std::tuple<std::vector<int>, int, int, bool>, IrrepDecomposition> cache;
    const int r = cfg.q_rank();
    auto key = std::make_tuple(cfg.delta.parts(), s, r, cfg.has_bundle());
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    IrrepDecomposition layer(r);
    if (!cfg.has_bundle() || cfg.delta.length() > r) {
        if (s == 0) layer.add(GLWeight::zero(r), 1);
    } else {
        layer = wedge_plethysm_general(cfg.delta, s, r);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(layer)).first->second;
}

const IrrepDecomposition& sym_bundle_layer(const FamilyConfig& cfg, int d) {
    static std::mutex mu;
    static std::map<std::tuple<int, std::vector<int>, int, int>, IrrepDecomposition> cache;
    const int r = cfg.q_rank();
    auto key = std::make_tuple(static_cast<int>(cfg.has_bundle()), cfg.delta.parts(), d, r);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    IrrepDecomposition layer(r);
    if (!cfg.has_bundle() || cfg.delta.length() > r) {
        if (d == 0) layer.add(GLWeight::zero(r), 1);
    } else if (cfg.delta == Partition{1}) {
        layer.add(GLWeight::from_partition(Partition{d}, r), 1);
    } else if (cfg.delta == Partition{2} || cfg.delta == Partition{1, 1}) {
        auto tag = cfg.delta == Partition{2} ? TensorSquareTag::sym2 : TensorSquareTag::wedge2;
        for (const auto& k : cauchy_layer(d, tag))
            if (k.length() <= r) layer.add(GLWeight::from_partition(k, r), 1);
    } else {
        layer = sym_plethysm_general(cfg.delta, d, r);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(layer)).first->second;
}

namespace {

void check_vertex(const FamilyConfig& cfg, const Partition& p) {
    if (!fits(p, cfg.q_rank(), cfg.r_rank()))
        throw std::invalid_argument("partition " + to_string(p) + " is not a vertex of the quiver");
}

// S_{beta'} R* (x) S_{alpha'} R as a GL(k) decomposition
IrrepDecomposition r_side(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta) {
    const int k = cfg.r_rank();
    return tensor_dominant(GLWeight(transpose(beta).padded(k)), GLWeight(transpose(alpha).padded(k)).dual(), k);
}

}  // namespace

GradedDecomposition ext_simples(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta, int t_max) {
    check_vertex(cfg, alpha);
    check_vertex(cfg, beta);
    if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
    const GrassContext ctx = cfg.grass();
    const auto gammas = r_side(cfg, alpha, beta);
    GradedDecomposition out;
    for (int s = 0; s <= t_max; ++s) {
        const auto& layer = koszul_layer(cfg, s);
        if (s > 0 && layer.empty()) break;
        for (const auto& [lam, lmult] : layer.terms) {
            for (const auto& [gamma, gmult] : gammas.terms) {
                auto res = cohomology(ctx, gamma, lam);
                if (res.vanishes) continue;
                const int t = res.degree + s + gamma.area();
                if (t > t_max) continue;
                auto [it, ins] = out.try_emplace(t, IrrepDecomposition(cfg.n));
                it->second.add(res.weight, lmult * gmult);
            }
        }
    }
    return out;
}

namespace {

struct ClosedForm {
    const FamilyConfig& cfg;
    IrrepDecomposition gammas;
    IrrepDecomposition out;

    ClosedForm(const FamilyConfig& c, const Partition& alpha, const Partition& beta)
        : cfg(c), gammas(r_side(c, alpha, beta)), out(c.n) {}

    // gamma written as (head..., 0, ..., tail...) of length k
    long long coeff(std::vector<int> head, std::vector<int> tail) const {
        const int k = cfg.r_rank();
        if (static_cast<int>(head.size() + tail.size()) > k) return 0;
        std::vector<int> g(head);
        g.resize(k - tail.size(), 0);
        g.insert(g.end(), tail.begin(), tail.end());
        GLWeight w(g);
        if (!w.is_dominant()) return 0;
        return gammas.multiplicity(w);
    }

    void add(const Partition& label, long long mult) {
        if (mult == 0 || label.length() > cfg.n) return;
        out.add(GLWeight::from_partition(label, cfg.n), mult);
    }
};

}  // namespace

IrrepDecomposition ext1_closed(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta) {
    check_vertex(cfg, alpha);
    check_vertex(cfg, beta);
    ClosedForm f(cfg, alpha, beta);
    const int k = cfg.r_rank();
    const Partition E{1}, C{};
    if (cfg.family == Family::symmetric) {
        if (k == 1) {
            f.add(E, f.coeff({1}, {}));
            f.add(E, f.coeff({}, {-1}));
        } else if (k >= 2) {
            f.add(E, f.coeff({1}, {}));
            f.add(C, f.coeff({}, {-1, -1}));
        }
    } else if (cfg.family == Family::skew) {
        if (k >= 1) {
            f.add(E, f.coeff({1}, {}));
            f.add(C, f.coeff({}, {-2}));
        }
    } else {
        throw std::invalid_argument("closed forms exist only for the sym and skew families");
    }
    return f.out;
}

IrrepDecomposition ext2_closed(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta) {
    check_vertex(cfg, alpha);
    check_vertex(cfg, beta);
    ClosedForm f(cfg, alpha, beta);
    const int k = cfg.r_rank();
    const Partition E{1}, C{}, S2{2}, W2{1, 1}, W3{1, 1, 1};
    if (cfg.family == Family::symmetric) {
        if (k == 1) {
            f.add(S2, f.coeff({2}, {}));
            f.add(S2, f.coeff({}, {-2}));
            if (alpha == beta) f.add(W2, 1);
        } else if (k == 2) {
            f.add(W2, f.coeff({1, -1}, {}));
            f.add(E, f.coeff({-1, -2}, {}));
            f.add(S2, f.coeff({2}, {}));
            f.add(W2, f.coeff({1, 1}, {}));
        } else if (k >= 3) {
            f.add(C, f.coeff({}, {-1, -1, -2}));
            f.add(E, f.coeff({1}, {-1, -1}));
            f.add(S2, f.coeff({2}, {}));
            f.add(W2, f.coeff({1, 1}, {}));
        }
    } else if (cfg.family == Family::skew) {
        if (k == 1) {
            f.add(W3, f.coeff({1}, {}));
            f.add(S2, f.coeff({2}, {}));
            // gamma_min of (2,1,1) is (-3) with t = 2
            f.add(E, f.coeff({}, {-3}));
        } else if (k >= 2) {
            f.add(C, f.coeff({}, {-1, -3}));
            f.add(E, f.coeff({1}, {-2}));
            f.add(S2, f.coeff({2}, {}));
            f.add(W2, f.coeff({1, 1}, {}));
        }
    } else {
        throw std::invalid_argument("closed forms exist only for the sym and skew families");
    }
    return f.out;
}

std::vector<GLWeight> brute_gamma_candidates(const GrassContext& ctx) {
    const int k = ctx.k;
    const int b = ctx.q_rank();
    std::vector<GLWeight> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int hi) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(cur);
            return;
        }
        for (int v = hi; v >= -b; --v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, b);
    return out;
}

}  // namespace ncd
