#include "ncd/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace ncd {

LaurentPoly LaurentPoly::monomial(const BigInt& c, int e) {
    LaurentPoly p;
    if (c != 0) p.c_[e] = c;
    return p;
}

LaurentPoly LaurentPoly::one_minus(int a) {
    return LaurentPoly(1) - monomial(1, a);
}

LaurentPoly LaurentPoly::from_coeffs(const std::map<int, BigInt>& c) {
    LaurentPoly p;
    for (const auto& [e, v] : c)
        if (v != 0) p.c_[e] = v;
    return p;
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? BigInt(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) {
        BigInt& x = c_[e];
        x += v;
        if (x == 0) c_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) {
        BigInt& x = c_[e];
        x -= v;
        if (x == 0) c_.erase(e);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) out.c_[ea + eb] += va * vb;
    std::erase_if(out.c_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& [e, v] : p.c_) v = -v;
    return p;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly p;
    for (const auto& [x, v] : c_) p.c_[x + e] = v;
    return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
    LaurentPoly out(1), base(*this);
    for (; k > 0; k >>= 1) {
        if (k & 1) out = out * base;
        if (k > 1) base = base * base;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        BigInt mag = v < 0 ? BigInt(-v) : v;
        if (v < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPoly();
    // long division from the top degree
    std::map<int, BigInt> rem = a.coeffs();
    std::map<int, BigInt> quo;
    const int bh = b.high();
    const int bl = b.low();
    const BigInt lead = b.coeff(bh);
    while (!rem.empty()) {
        const int rh = rem.rbegin()->first;
        const BigInt rv = rem.rbegin()->second;
        if (rh - bh + bl < a.low()) return std::nullopt;
        if (rv % lead != 0) return std::nullopt;
        const BigInt q = rv / lead;
        const int qe = rh - bh;
        quo[qe] = q;
        for (const auto& [e, v] : b.coeffs()) {
            BigInt& x = rem[e + qe];
            x -= q * v;
            if (x == 0) rem.erase(e + qe);
        }
    }
    return LaurentPoly::from_coeffs(quo);
}

HilbertSeries HilbertSeries::reduced() const {
    HilbertSeries h = *this;
    if (h.num.is_zero()) {
        h.den.clear();
        return h;
    }
    for (auto& [a, m] : h.den) {
        const LaurentPoly f = LaurentPoly::one_minus(a);
        while (m > 0) {
            auto q = divide_exact(h.num, f);
            if (!q) break;
            h.num = *q;
            --m;
        }
    }
    std::erase_if(h.den, [](const auto& kv) { return kv.second == 0; });
    return h;
}

HilbertSeries HilbertSeries::with_denominator(const std::map<int, int>& target) const {
    for (const auto& [a, m] : den) {
        auto it = target.find(a);
        if (it == target.end() || it->second < m)
            throw std::invalid_argument("target denominator is not a multiple of the series denominator");
    }
    HilbertSeries h{num, target};
    for (const auto& [a, m] : target) {
        auto it = den.find(a);
        const int have = it == den.end() ? 0 : it->second;
        h.num = h.num * LaurentPoly::one_minus(a).pow(m - have);
    }
    return h;
}

std::map<int, BigInt> HilbertSeries::expand(int lo, int hi) const {
    std::map<int, BigInt> out;
    if (hi < lo) return out;
    const int base = num.is_zero() ? lo : std::min(lo, num.low());
    std::vector<BigInt> v(hi - base + 1);
    for (const auto& [e, c] : num.coeffs())
        if (e <= hi) v[e - base] = c;
    for (const auto& [a, m] : den)
        for (int rep = 0; rep < m; ++rep)
            for (size_t i = a; i < v.size(); ++i) v[i] += v[i - a];
    for (int e = lo; e <= hi; ++e) out[e] = v[e - base];
    return out;
}

std::string HilbertSeries::str() const {
    if (den.empty()) return num.str();
    std::string s = "(" + num.str() + ")/";
    for (const auto& [a, m] : den) {
        s += "(1-t" + (a == 1 ? std::string() : "^" + std::to_string(a)) + ")";
        if (m != 1) s += "^" + std::to_string(m);
    }
    return s;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    LaurentPoly l = num, r = o.num;
    for (const auto& [a, m] : o.den) l = l * LaurentPoly::one_minus(a).pow(m);
    for (const auto& [a, m] : den) r = r * LaurentPoly::one_minus(a).pow(m);
    return l == r;
}

namespace {

void check_vertex(const FamilyConfig& cfg, const Partition& p) {
    if (!fits(p, cfg.q_rank(), cfg.r_rank()))
        throw std::invalid_argument("partition " + to_string(p) + " is not a vertex");
}

int grading_step(const FamilyConfig& cfg) { return cfg.has_bundle() ? cfg.delta.area() : 0; }

}  // namespace

std::map<int, BigInt> hom_coefficients(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta,
                                       int d_max) {
    check_vertex(cfg, alpha);
    check_vertex(cfg, beta);
    const int r = cfg.q_rank();
    const GrassContext ctx = cfg.grass();
    const GLWeight zero_r = GLWeight::zero(ctx.k);
    // S_alpha Q (x) S_beta Q* in Q*-labels
    const auto base = tensor_dominant(GLWeight(alpha.padded(r)).dual(), GLWeight(beta.padded(r)), r);
    const int g = grading_step(cfg);
    std::map<int, BigInt> out;
    for (int d = 0; d <= d_max; ++d) {
        const int e = g * d + alpha.area() - beta.area();
        BigInt total = 0;
        for (const auto& [kappa, km] : sym_bundle_layer(cfg, d).terms) {
            auto prod = tensor_dominant(base, kappa.dual());
            for (const auto& [q, qm] : prod.terms) {
                auto res = cohomology(ctx, zero_r, q);
                if (res.vanishes || res.degree != 0) continue;
                total += BigInt(qm) * km * dim_irrep(res.weight, cfg.n);
            }
        }
        out[e] += total;
        if (!cfg.has_bundle()) break;
    }
    return out;
}

HilbertSeries hom_series(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta) {
    if (!cfg.has_bundle()) return {LaurentPoly::from_coeffs(hom_coefficients(cfg, alpha, beta, 0)), {}};
    const int g = grading_step(cfg);
    const int dim = static_cast<int>(dim_irrep(cfg.delta, cfg.n));
    const int window = 2 * dim + 2;
    const int e0 = alpha.area() - beta.area();
    // multiply the truncated series by (1-u)^dim, u = t^g, and wait for a run of zeros at the top
    for (int d_max = 3 * dim + 4; d_max <= 512; d_max *= 2) {
        auto coeffs = hom_coefficients(cfg, alpha, beta, d_max);
        std::vector<BigInt> c(d_max + 1);
        for (int d = 0; d <= d_max; ++d) c[d] = coeffs[e0 + g * d];
        for (int rep = 0; rep < dim; ++rep)
            for (int i = d_max; i >= 1; --i) c[i] -= c[i - 1];
        bool clean = true;
        for (int i = d_max - window + 1; i <= d_max; ++i)
            if (c[i] != 0) clean = false;
        if (!clean) continue;
        std::map<int, BigInt> num;
        for (int i = 0; i <= d_max - window; ++i) num[e0 + g * i] = c[i];
        return HilbertSeries{LaurentPoly::from_coeffs(num), {{g, dim}}}.reduced();
    }
    throw ResourceError("hom_series: numerator did not stabilise");
}

HilbertSeries module_series(const FamilyConfig& cfg, const Partition& alpha) {
    auto h = hom_series(cfg, Partition{}, alpha);
    h.num = h.num.shifted(-alpha.area());
    return h;
}

SeriesMatrix series_matrix(const FamilyConfig& cfg) {
    const auto verts = cfg.vertices();
    SeriesMatrix m(verts.size(), std::vector<HilbertSeries>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j) m[i][j] = hom_series(cfg, verts[i], verts[j]);
    return m;
}

LaurentPoly bareiss_det(PolyMatrix m) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    int sign = 1;
    LaurentPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return LaurentPoly();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                auto q = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
                if (!q) throw std::logic_error("bareiss: inexact division");
                m[i][j] = *q;
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

PolyMatrix invert_series_matrix(const SeriesMatrix& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("series matrix is not square");
    std::map<int, int> cden;
    for (const auto& row : m)
        for (const auto& h : row)
            for (const auto& [a, k] : h.den) cden[a] = std::max(cden[a], k);
    PolyMatrix num(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) num[i][j] = m[i][j].with_denominator(cden).num;
    const LaurentPoly det = bareiss_det(num);
    if (det.is_zero()) throw SingularMatrixError("series matrix is singular");
    LaurentPoly scale(1);
    for (const auto& [a, k] : cden) scale = scale * LaurentPoly::one_minus(a).pow(k);
    PolyMatrix inv(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // cofactor C_ji
            PolyMatrix minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<LaurentPoly> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(num[r][c]);
                minor.push_back(std::move(row));
            }
            LaurentPoly cof = bareiss_det(std::move(minor));
            if ((i + j) % 2) cof = -cof;
            auto q = divide_exact(cof * scale, det);
            if (!q) throw std::logic_error("inverse entry is not a Laurent polynomial");
            inv[i][j] = *q;
        }
    return inv;
}

ResolutionTable resolution_of_simple(const FamilyConfig& cfg, const Partition& alpha, int steps) {
    check_vertex(cfg, alpha);
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    ResolutionTable res{cfg.vertices(), std::vector<std::vector<ResolutionTerm>>(steps + 1)};
    for (size_t b = 0; b < res.vertices.size(); ++b) {
        auto ext = ext_simples(cfg, alpha, res.vertices[b], steps);
        for (const auto& [t, layer] : ext)
            for (const auto& [w, m] : layer.terms) res.steps[t].push_back({w, static_cast<int>(b), m});
    }
    return res;
}

std::vector<LaurentPoly> alternating_sums(const ResolutionTable& res, int n) {
    std::vector<LaurentPoly> out(res.vertices.size());
    for (size_t i = 0; i < res.steps.size(); ++i)
        for (const auto& term : res.steps[i]) {
            BigInt c = dim_irrep(term.weight, n) * term.mult;
            if (i % 2) c = -c;
            out[term.vertex] += LaurentPoly::monomial(c, term.weight.area());
        }
    return out;
}

}  // namespace ncd
