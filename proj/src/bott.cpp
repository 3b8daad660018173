#include "ncd/bott.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ncd {

GrassContext::GrassContext(int n_, int k_) : n(n_), k(k_) {
    if (k < 0 || k > n) throw std::invalid_argument("GrassContext needs 0 <= k <= n");
}

CohomologyOutcome dotted_sort(const GLWeight& w) {
    const int n = w.rank();
    std::vector<int> v(w.entries());
    for (int i = 0; i < n; ++i) v[i] += n - 1 - i;
    // insertion sort counting swaps; ties mean a repeated entry
    int swaps = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = i; j > 0 && v[j] >= v[j - 1]; --j) {
            if (v[j] == v[j - 1]) return CohomologyOutcome::zero();
            std::swap(v[j], v[j - 1]);
            ++swaps;
        }
    }
    for (int i = 1; i < n; ++i)
        if (v[i] == v[i - 1]) return CohomologyOutcome::zero();
    for (int i = 0; i < n; ++i) v[i] -= n - 1 - i;
    return {false, swaps, GLWeight(v)};
}

CohomologyOutcome cohomology(const GrassContext& ctx, const GLWeight& r_label, const GLWeight& q_label) {
    if (r_label.rank() != ctx.k || q_label.rank() != ctx.q_rank())
        throw std::invalid_argument("cohomology: label ranks do not match the Grassmannian");
    if (!r_label.is_dominant() || !q_label.is_dominant())
        throw std::invalid_argument("cohomology: labels must be dominant");
    std::vector<int> w(r_label.entries());
    w.insert(w.end(), q_label.entries().begin(), q_label.entries().end());
    return dotted_sort(GLWeight(w));
}

bool vanishing_filters(const Partition& lambda, const GLWeight& gamma, int s, int t, const Partition& delta) {
    if (s > t) return true;
    const int deg = t - s - gamma.area();
    if (deg < 0) return true;
    // nonvanishing forces the Bott degree to be at most |delta| s
    if (delta.area() * s < deg) return true;
    if (gamma.positive_part().area() > t - s) return true;
    if (!contains(lambda, transpose(gamma.negative_part()))) return true;
    return false;
}

namespace {

std::vector<int> q_block(const Partition& lambda, int r) {
    std::vector<int> b(r);
    for (int i = 0; i < r; ++i) b[i] = lambda[i] + r - 1 - i;
    return b;
}

GammaStep step_from_a(const std::vector<int>& a, const std::vector<int>& b, const GrassContext& ctx, int s) {
    const int k = ctx.k;
    std::vector<int> g(k);
    for (int j = 0; j < k; ++j) g[j] = a[j] - (ctx.n - 1 - j);
    int deg = 0;
    for (int x : a)
        for (int y : b)
            if (x < y) ++deg;
    GLWeight gamma(g);
    return {gamma, deg + s + gamma.area(), deg};
}

bool admissible(int v, const std::vector<int>& b) { return v >= 0 && std::find(b.begin(), b.end(), v) == b.end(); }

int next_admissible(int v, const std::vector<int>& b) {
    ++v;
    while (!admissible(v, b)) ++v;
    return v;
}

}  // namespace

GammaStep minimal_gamma(const Partition& lambda, const GrassContext& ctx, int s) {
    const int r = ctx.q_rank();
    if (lambda.length() > r) throw std::invalid_argument("minimal_gamma: lambda longer than the Q-rank");
    auto b = q_block(lambda, r);
    // the k smallest admissible entries of gamma + rho, placed in decreasing order
    std::vector<int> a;
    for (int v = 0; static_cast<int>(a.size()) < ctx.k; ++v)
        if (admissible(v, b)) a.push_back(v);
    std::reverse(a.begin(), a.end());
    return step_from_a(a, b, ctx, s);
}

GammaStep gamma_successors(const GLWeight& gamma, const Partition& lambda, int op_index, const GrassContext& ctx,
                           int s) {
    const int k = ctx.k;
    const int r = ctx.q_rank();
    if (op_index < 1 || op_index > k) throw std::invalid_argument("gamma_successors: operation index out of range");
    if (gamma.rank() != k || !gamma.is_dominant()) throw std::invalid_argument("gamma_successors: bad gamma");
    if (lambda.length() > r) throw std::invalid_argument("gamma_successors: lambda longer than the Q-rank");
    auto b = q_block(lambda, r);
    std::vector<int> a(k);
    for (int j = 0; j < k; ++j) {
        a[j] = gamma[j] + ctx.n - 1 - j;
        if (!admissible(a[j], b)) throw std::invalid_argument("gamma_successors: gamma has vanishing cohomology");
    }
    const int sidx = op_index - 1;
    a[sidx] = next_admissible(a[sidx], b);
    for (int l = sidx - 1; l >= 0; --l) a[l] = std::max(a[l], next_admissible(a[l + 1], b));
    return step_from_a(a, b, ctx, s);
}

std::vector<GammaStep> enumerate_gammas(const Partition& lambda, const GrassContext& ctx, int s) {
    const int bound = ctx.q_rank();
    std::vector<GammaStep> out;
    std::set<GLWeight> seen;
    std::deque<GammaStep> queue{minimal_gamma(lambda, ctx, s)};
    if (ctx.k > 0 && queue.front().gamma[0] > bound) return out;
    seen.insert(queue.front().gamma);
    while (!queue.empty()) {
        GammaStep cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (int op = 1; op <= ctx.k; ++op) {
            GammaStep nxt = gamma_successors(cur.gamma, lambda, op, ctx, s);
            if (nxt.gamma[0] > bound || seen.count(nxt.gamma)) continue;
            seen.insert(nxt.gamma);
            queue.push_back(nxt);
        }
    }
    std::sort(out.begin(), out.end(), [](const GammaStep& x, const GammaStep& y) { return x.gamma < y.gamma; });
    return out;
}

}  // namespace ncd
