#include "ncd/gl_characters.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace ncd {

void IrrepDecomposition::add(const GLWeight& w, long long mult) {
    if (mult == 0) return;
    if (w.rank() != rank) throw std::invalid_argument("weight rank does not match decomposition rank");
    if (!w.is_dominant()) throw std::invalid_argument("decomposition keys must be dominant");
    auto& slot = terms[w];
    slot += mult;
    if (slot == 0) terms.erase(w);
}

void IrrepDecomposition::merge(const IrrepDecomposition& other, long long factor) {
    for (const auto& [w, c] : other.terms) add(w, c * factor);
}

long long IrrepDecomposition::multiplicity(const GLWeight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

BigInt IrrepDecomposition::total_dim() const {
    BigInt s = 0;
    for (const auto& [w, c] : terms) s += BigInt(c) * dim_irrep(w, rank);
    return s;
}

namespace {

// LR tableaux are built label by label; label L occupies a horizontal strip and
// the reading word (rows top to bottom, right to left) must stay a lattice word.
struct LrSearch {
    std::vector<int> content;
    int max_len;
    const Partition* target;
    std::map<Partition, long long>* out;

    void run(std::vector<int> shape, std::vector<int> prev_cum, int label) {
        if (label == static_cast<int>(content.size())) {
            (*out)[Partition(shape)] += 1;
            return;
        }
        int rows = static_cast<int>(shape.size()) + 1;
        if (max_len >= 0) rows = std::min(rows, max_len);
        shape.resize(std::max<int>(rows, shape.size()), 0);
        std::vector<int> x(rows, 0);
        std::vector<int> cum(rows, 0);
        strip(shape, prev_cum, label, 0, content[label], x, cum);
    }

    void strip(const std::vector<int>& shape, const std::vector<int>& prev_cum, int label, int row, int remaining,
               std::vector<int>& x, std::vector<int>& cum) {
        const int rows = static_cast<int>(x.size());
        if (row == rows) {
            if (remaining != 0) return;
            std::vector<int> ns(shape);
            for (int j = 0; j < rows; ++j) ns[j] += x[j];
            while (!ns.empty() && ns.back() == 0) ns.pop_back();
            run(ns, cum, label + 1);
            return;
        }
        int cap = row == 0 ? remaining : shape[row - 1] - shape[row];
        cap = std::min(cap, remaining);
        if (target) cap = std::min(cap, (*target)[row] - shape[row]);
        const int before = row == 0 ? 0 : cum[row - 1];
        if (label > 0) {
            const int allowed = row == 0 ? 0 : prev_cum[row - 1];
            cap = std::min(cap, allowed - before);
        }
        for (int v = cap; v >= 0; --v) {
            x[row] = v;
            cum[row] = before + v;
            strip(shape, prev_cum, label, row + 1, remaining - v, x, cum);
        }
        x[row] = 0;
    }
};

struct PairHash {
    size_t operator()(const std::pair<std::vector<int>, std::vector<int>>& k) const {
        size_t h = 1469598103934665603ull;
        for (int v : k.first) h = (h ^ static_cast<size_t>(v + 7)) * 1099511628211ull;
        h = (h ^ 0xff) * 1099511628211ull;
        for (int v : k.second) h = (h ^ static_cast<size_t>(v + 7)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

std::map<Partition, long long> lr_product(const Partition& alpha, const Partition& beta, int max_len) {
    thread_local std::unordered_map<std::pair<std::vector<int>, std::vector<int>>, std::map<Partition, long long>,
                                    PairHash>
        memo;
    // the product is symmetric; use the smaller one as the content
    const Partition& base = alpha.area() >= beta.area() ? alpha : beta;
    const Partition& cont = alpha.area() >= beta.area() ? beta : alpha;
    std::map<Partition, long long> full;
    if (max_len >= 0 && std::max(alpha.length(), beta.length()) > max_len) return full;
    auto key = std::make_pair(base.parts(), cont.parts());
    key.second.push_back(-1 - std::max(max_len, -1));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    LrSearch s{cont.parts(), max_len, nullptr, &full};
    s.run(base.parts(), {}, 0);
    if (memo.size() > 200000) memo.clear();
    memo.emplace(key, full);
    return full;
}

long long lr_coefficient(const Partition& mu, const Partition& alpha, const Partition& beta) {
    if (mu.area() != alpha.area() + beta.area() || !contains(mu, alpha) || !contains(mu, beta)) return 0;
    std::map<Partition, long long> out;
    LrSearch s{beta.parts(), mu.length(), &mu, &out};
    s.run(alpha.parts(), {}, 0);
    auto it = out.find(mu);
    return it == out.end() ? 0 : it->second;
}

IrrepDecomposition tensor_dominant(const GLWeight& a, const GLWeight& b, int m) {
    if (a.rank() != m || b.rank() != m) throw std::invalid_argument("tensor_dominant: rank mismatch");
    if (!a.is_dominant() || !b.is_dominant()) throw std::invalid_argument("tensor_dominant: inputs must be dominant");
    IrrepDecomposition out(m);
    if (m == 0) {
        out.add(GLWeight{}, 1);
        return out;
    }
    const int ca = std::max(0, -a[m - 1]);
    const int cb = std::max(0, -b[m - 1]);
    Partition pa(a.shifted(ca).entries());
    Partition pb(b.shifted(cb).entries());
    for (const auto& [mu, c] : lr_product(pa, pb, m)) out.add(GLWeight(mu.padded(m)).shifted(-ca - cb), c);
    return out;
}

IrrepDecomposition tensor_dominant(const IrrepDecomposition& a, const GLWeight& b) {
    IrrepDecomposition out(a.rank);
    for (const auto& [w, c] : a.terms) out.merge(tensor_dominant(w, b, a.rank), c);
    return out;
}

BigInt dim_irrep(const GLWeight& w, int m) {
    if (w.rank() != m || !w.is_dominant()) throw std::invalid_argument("dim_irrep: need a dominant weight of rank m");
    BigInt num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= w[i] - w[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

BigInt dim_irrep(const Partition& p, int m) {
    if (p.length() > m) return 0;
    return dim_irrep(GLWeight::from_partition(p, m), m);
}

std::vector<Partition> cauchy_layer(int d, TensorSquareTag tag) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Partition> out;
    for (const auto& p : partitions_of(d)) {
        std::vector<int> v;
        switch (tag) {
            case TensorSquareTag::sym2:
                for (int x : p.parts()) v.push_back(2 * x);
                break;
            case TensorSquareTag::wedge2:
                for (int x : p.parts()) {
                    v.push_back(x);
                    v.push_back(x);
                }
                break;
            case TensorSquareTag::tensor_pair:
                v = p.parts();
                break;
        }
        out.emplace_back(v);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

namespace {
void strict_parts(int remaining, int max_part, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int x = std::min(remaining, max_part); x >= min_part; --x) {
        cur.push_back(x);
        strict_parts(remaining - x, x - 1, min_part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> wedge_plethysm_hooks(int s, TensorSquareTag tag) {
    if (s < 0) throw std::invalid_argument("negative degree");
    if (tag == TensorSquareTag::tensor_pair) throw std::invalid_argument("hook formula needs sym2 or wedge2");
    std::vector<Partition> out;
    std::vector<std::vector<int>> arms_list;
    std::vector<int> cur;
    if (tag == TensorSquareTag::sym2) {
        // (a_1..a_d | a_1-1..a_d-1): each diagonal hook has 2 a_i boxes
        strict_parts(s, s, 1, cur, arms_list);
        for (const auto& a : arms_list) {
            std::vector<int> legs(a);
            for (auto& x : legs) x -= 1;
            out.push_back(from_hook(a, legs));
        }
    } else {
        // (a_1..a_d | a_1+1..a_d+1): each diagonal hook has 2 a_i + 2 boxes
        strict_parts(s, s, 1, cur, arms_list);
        for (const auto& b : arms_list) {
            std::vector<int> arms(b), legs(b);
            for (auto& x : arms) x -= 1;
            out.push_back(from_hook(arms, legs));
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

namespace {

struct KostkaKey {
    std::vector<int> shape;
    std::vector<int> content;
    bool operator==(const KostkaKey&) const = default;
};
struct KostkaHash {
    size_t operator()(const KostkaKey& k) const {
        return PairHash{}(std::make_pair(k.shape, k.content));
    }
};

BigInt kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, int upto,
                  std::unordered_map<KostkaKey, BigInt, KostkaHash>& memo) {
    if (upto == 0) return shape.empty() ? 1 : 0;
    const int rows = static_cast<int>(shape.size());
    if (rows > upto) return 0;
    KostkaKey key{shape, std::vector<int>(content.begin(), content.begin() + upto)};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // remove a horizontal strip of size content[upto-1]
    BigInt total = 0;
    std::vector<int> nu(shape);
    std::function<void(int, int)> go = [&](int row, int remaining) {
        if (row == rows) {
            if (remaining == 0) {
                std::vector<int> t(nu);
                while (!t.empty() && t.back() == 0) t.pop_back();
                total += kostka_rec(t, content, upto - 1, memo);
            }
            return;
        }
        const int lo = row + 1 < rows ? shape[row + 1] : 0;
        for (int v = 0; v <= std::min(remaining, shape[row] - lo); ++v) {
            nu[row] = shape[row] - v;
            go(row + 1, remaining - v);
        }
        nu[row] = shape[row];
    };
    go(0, content[upto - 1]);
    memo.emplace(key, total);
    return total;
}

}  // namespace

BigInt kostka(const Partition& lambda, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) return 0;
        total += c;
    }
    if (total != lambda.area()) return 0;
    thread_local std::unordered_map<KostkaKey, BigInt, KostkaHash> memo;
    if (memo.size() > 500000) memo.clear();
    return kostka_rec(lambda.parts(), content, static_cast<int>(content.size()), memo);
}

namespace {
std::atomic<std::size_t> g_plethysm_limit{4'000'000};
}

void set_plethysm_limit(std::size_t max_terms) { g_plethysm_limit = max_terms; }
std::size_t plethysm_limit() { return g_plethysm_limit; }

std::vector<std::vector<int>> schur_monomials(const Partition& delta, int m) {
    std::vector<std::vector<int>> out;
    if (delta.length() > m) return out;
    // fill row by row, cells left to right, tracking the row above
    const int rows = delta.length();
    std::vector<std::vector<int>> tab(rows);
    for (int i = 0; i < rows; ++i) tab[i].assign(delta[i], 0);
    std::vector<int> weight(m, 0);
    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i == rows) {
            out.push_back(weight);
            if (out.size() > plethysm_limit()) throw ResourceError("Schur monomial expansion exceeds the configured bound");
            return;
        }
        if (j == delta[i]) {
            fill(i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, tab[i][j - 1]);
        if (i > 0) lo = std::max(lo, tab[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            tab[i][j] = v;
            ++weight[v - 1];
            fill(i, j + 1);
            --weight[v - 1];
        }
    };
    fill(0, 0);
    return out;
}

namespace {

std::vector<std::vector<int>> dominant_targets(int degree, int m, int max_part) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(degree, m, max_part)) out.push_back(p.padded(m));
    return out;
}

}  // namespace

DominantCharacter layer_character(const std::vector<std::vector<int>>& weights, int m, int s, bool exterior) {
    if (s < 0) throw std::invalid_argument("negative degree");
    int wdeg = 0, wmax = 0;
    if (!weights.empty()) {
        wdeg = std::accumulate(weights[0].begin(), weights[0].end(), 0);
        for (const auto& w : weights)
            for (int x : w) wmax = std::max(wmax, x);
    }
    std::vector<DominantCharacter> layer(s + 1);
    layer[0][std::vector<int>(m, 0)] = 1;
    std::size_t work = 0;
    for (int k = 1; k <= s; ++k) {
        auto targets = dominant_targets(wdeg * k, m, wmax * k);
        work += targets.size() * weights.size() * static_cast<std::size_t>(k);
        if (targets.size() > plethysm_limit() || work > 400 * plethysm_limit())
            throw ResourceError("plethysm layer exceeds the configured bound");
        std::vector<int> probe(m);
        for (const auto& b : targets) {
            BigInt acc = 0;
            for (int i = 1; i <= k; ++i) {
                const auto& prev = layer[k - i];
                BigInt part = 0;
                for (const auto& w : weights) {
                    bool ok = true;
                    for (int c = 0; c < m; ++c) {
                        probe[c] = b[c] - i * w[c];
                        if (probe[c] < 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    std::sort(probe.begin(), probe.end(), std::greater<>());
                    if (auto it = prev.find(probe); it != prev.end()) part += it->second;
                }
                if (exterior && i % 2 == 0)
                    acc -= part;
                else
                    acc += part;
            }
            if (acc % k != 0) throw std::logic_error("Newton recursion produced a non-integral coefficient");
            acc /= k;
            if (acc != 0) layer[k][b] = acc;
        }
    }
    return layer[s];
}

IrrepDecomposition decompose_leading_term(const DominantCharacter& ch, int m) {
    IrrepDecomposition out(m);
    DominantCharacter rest(ch);
    while (true) {
        auto it = std::find_if(rest.begin(), rest.end(), [](const auto& kv) { return kv.second != 0; });
        if (it == rest.end()) break;
        const std::vector<int> lead = it->first;
        const BigInt c = it->second;
        if (c < 0) throw std::logic_error("character has a negative leading coefficient");
        out.add(GLWeight(lead), static_cast<long long>(c));
        Partition lam(lead);
        for (auto& [mu, coef] : rest) {
            if (mu > lead) continue;
            coef -= c * kostka(lam, mu);
        }
    }
    return out;
}

IrrepDecomposition decompose_weyl(const DominantCharacter& ch, int m, int degree) {
    IrrepDecomposition out(m);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> perms;
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        perms.emplace_back(perm, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<int> probe(m);
    for (const auto& p : partitions_of(degree, m)) {
        auto kappa = p.padded(m);
        BigInt mult = 0;
        for (const auto& [sigma, sign] : perms) {
            // exponent kappa + rho - sigma(rho), with rho_i = m-1-i
            bool ok = true;
            for (int i = 0; i < m; ++i) {
                probe[i] = kappa[i] + (m - 1 - i) - (m - 1 - sigma[i]);
                if (probe[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::sort(probe.begin(), probe.end(), std::greater<>());
            if (auto it = ch.find(probe); it != ch.end()) mult += sign * it->second;
        }
        if (mult < 0) throw std::logic_error("negative multiplicity in Weyl inversion");
        if (mult != 0) out.add(GLWeight(kappa), static_cast<long long>(mult));
    }
    return out;
}

IrrepDecomposition wedge_plethysm_general(const Partition& delta, int s, int m) {
    // S_delta of a too-small space is zero
    if (delta.length() > m) {
        IrrepDecomposition out(m);
        if (s == 0) out.add(GLWeight::zero(m), 1);
        return out;
    }
    auto w = schur_monomials(delta, m);
    if (s > static_cast<int>(w.size())) return IrrepDecomposition(m);
    return decompose_leading_term(layer_character(w, m, s, true), m);
}

IrrepDecomposition sym_plethysm_general(const Partition& delta, int p, int m) {
    auto w = delta.length() > m ? std::vector<std::vector<int>>{} : schur_monomials(delta, m);
    if (w.empty()) {
        IrrepDecomposition out(m);
        if (p == 0) out.add(GLWeight::zero(m), 1);
        return out;
    }
    return decompose_weyl(layer_character(w, m, p, false), m, delta.area() * p);
}

}  // namespace ncd
