// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ncd/bott.hpp"
#include "ncd/ext_engine.hpp"
#include "ncd/geometric.hpp"
#include "ncd/gl_characters.hpp"
#include "ncd/hilbert.hpp"
#include "ncd/partition.hpp"
#include "ncd/quiver.hpp"
#include "oracles.hpp"

using namespace ncd;

namespace {

// runtime ceilings in seconds
constexpr double kLimitC1 = 5.0;
constexpr double kLimitC2 = 30.0;
constexpr double kLimitC5 = 120.0;
// witness search depth for criterion 8
constexpr int kMcmDepth = 20;
// power-series depth for criterion 9
constexpr int kSeriesDepth = 12;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " [" << what << "]: " << detail << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_time(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

// reads displayed polynomials such as "15t^8-6t^{10}-t^{12}-15t^4+6t^2+1"
LaurentPoly parse_tex_poly(const std::string& src) {
    std::string s;
    for (char c : src)
        if (c != ' ' && c != '{' && c != '}') s += c;
    LaurentPoly out;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
        long long coef = 1;
        bool have_digits = false;
        size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) coef = std::stoll(s.substr(i, j - i)), have_digits = true;
        i = j;
        int e = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t k = i;
                while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
                e = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_digits) {
            throw std::runtime_error("cannot parse polynomial '" + src + "'");
        }
        out += LaurentPoly::monomial(sign * coef, e);
    }
    return out;
}

using TexMatrix = std::vector<std::vector<std::string>>;

// n = 3, r = 2; common denominator (1-t^2)^5
const TexMatrix kMatrix3 = {{"1+t^2+t^4", "3t+3t^3", "3t^2"},
                            {"3t+3t^3", "1+10t^2+t^4", "3t+3t^3"},
                            {"3t^2", "3t+3t^3", "1+t^2+t^4"}};
const TexMatrix kInverse3 = {{"-t^6-3t^4+3t^2+1", "3t^5-3t", "-6t^4+6t^2"},
                             {"3t^5-3t", "-t^6-3t^4+3t^2+1", "3t^5-3t"},
                             {"-6t^4+6t^2", "3t^5-3t", "-t^6-3t^4+3t^2+1"}};

// n = 4, r = 3; common denominator (1-t^2)^{10}
const TexMatrix kMatrix4 = {{"1-t^8", "4-4t^6", "6-6t^4", "4-4t^2"},
                            {"4-4t^6", "17-16t^4-t^8", "28-24t^2-4t^6", "6-6t^4"},
                            {"6-6t^4", "28-24t^2-4t^6", "17-16t^4-t^8", "4-4t^6"},
                            {"4-4t^2", "6-6t^4", "4-4t^6", "1-t^8"}};
const std::string kDiag4 = "15t^8-6t^{10}-t^{12}-15t^4+6t^2+1";
const std::string kNext4 = "20t^5-20t^7+4t^{11}-4t";
const std::string kTwo4 = "-20t^4+20t^8-10t^{10}+10t^2";
const std::string kThree4 = "-20t^3+60t^5-60t^7+20t^9";
const TexMatrix kInverse4 = {{kDiag4, kNext4, kTwo4, kThree4},
                             {kNext4, kDiag4, kNext4, kTwo4},
                             {kTwo4, kNext4, kDiag4, kNext4},
                             {kThree4, kTwo4, kNext4, kDiag4}};

struct MatrixCheck {
    int matrix_ok = 0;
    int inverse_ok = 0;
    int cells = 0;
    std::vector<std::string> notes;
};

MatrixCheck check_matrices(const SeriesMatrix& m, const PolyMatrix& inv, const TexMatrix& tm, int den_exp,
                           const TexMatrix& ti) {
    MatrixCheck c;
    const size_t nv = tm.size();
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j) {
            ++c.cells;
            HilbertSeries printed{parse_tex_poly(tm[i][j]), {{2, den_exp}}};
            if (m[i][j].reduced().str() == printed.reduced().str()) ++c.matrix_ok;
            else if (c.notes.size() < 3)
                c.notes.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ") printed " +
                                  printed.reduced().str() + " computed " + m[i][j].reduced().str());
            if (inv[i][j] == parse_tex_poly(ti[i][j])) ++c.inverse_ok;
        }
    return c;
}

// product of a series matrix (given as numerators over one denominator) and a polynomial matrix
bool is_identity_product(const std::vector<std::vector<LaurentPoly>>& nums, int den_exp, const PolyMatrix& inv) {
    const size_t nv = nums.size();
    const LaurentPoly den = LaurentPoly::one_minus(2).pow(den_exp);
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j) {
            LaurentPoly acc;
            for (size_t k = 0; k < nv; ++k) acc += nums[i][k] * inv[k][j];
            if (!(acc == (i == j ? den : LaurentPoly()))) return false;
        }
    return true;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = FamilyConfig::symmetric(3, 2);
    auto m = series_matrix(cfg);
    auto inv = invert_series_matrix(m);
    const double dt = seconds_since(t0);
    auto c = check_matrices(m, inv, kMatrix3, 5, kInverse3);
    const bool ok = c.matrix_ok == c.cells && c.inverse_ok == c.cells && dt < kLimitC1;
    std::ostringstream d;
    d << "matrix " << c.matrix_ok << "/" << c.cells << ", inverse " << c.inverse_ok << "/" << c.cells << ", "
      << fmt_time(dt) << " (limit " << kLimitC1 << " s)";
    report(1, ok, "Hilbert matrix n=3 r=2", d.str());
}

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = FamilyConfig::symmetric(4, 3);
    auto m = series_matrix(cfg);
    auto inv = invert_series_matrix(m);
    const double dt = seconds_since(t0);
    auto c = check_matrices(m, inv, kMatrix4, 10, kInverse4);

    // is the printed display consistent with its own printed inverse?
    PolyMatrix printed_inv(4, std::vector<LaurentPoly>(4));
    std::vector<std::vector<LaurentPoly>> printed_num(4, std::vector<LaurentPoly>(4)), ours_num = printed_num;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            printed_inv[i][j] = parse_tex_poly(kInverse4[i][j]);
            printed_num[i][j] = parse_tex_poly(kMatrix4[i][j]);
            ours_num[i][j] = m[i][j].with_denominator({{2, 10}}).num;
        }
    const bool printed_pair = is_identity_product(printed_num, 10, printed_inv);
    const bool ours_pair = is_identity_product(ours_num, 10, printed_inv);

    const bool ok = c.matrix_ok == c.cells && c.inverse_ok == c.cells && dt < kLimitC2;
    std::ostringstream d;
    d << "matrix " << c.matrix_ok << "/" << c.cells << ", inverse " << c.inverse_ok << "/" << c.cells << ", "
      << fmt_time(dt) << " (limit " << kLimitC2 << " s)";
    d << "; printed matrix x printed inverse = I: " << (printed_pair ? "yes" : "no")
      << "; computed matrix x printed inverse = I: " << (ours_pair ? "yes" : "no");
    for (const auto& n : c.notes) d << "; " << n;
    report(2, ok, "Hilbert matrix n=4 r=3", d.str());
}

struct PrintedTerm {
    int step;
    Partition weight;
    int vertex;
};

// S_0 and S_1 resolutions as displayed, vertex i = (1^i)
const std::vector<PrintedTerm> kRes3S0 = {{0, {}, 0},        {1, {1}, 1},          {2, {1, 1}, 0},
                                          {2, {2}, 2},       {3, {2, 1, 1}, 0},    {3, {2, 2}, 2},
                                          {4, {2, 2, 1}, 1}, {5, {2, 2, 2}, 0}};
const std::vector<PrintedTerm> kRes3S1 = {{0, {}, 1},        {1, {1}, 0},          {1, {1}, 2},
                                          {2, {1, 1}, 1},    {3, {2, 1, 1}, 1},    {4, {2, 2, 1}, 0},
                                          {4, {2, 2, 1}, 2}, {5, {2, 2, 2}, 1}};
const std::vector<PrintedTerm> kRes4S0 = {
    {0, {}, 0},           {1, {1}, 1},          {2, {1, 1}, 0},       {2, {2}, 2},          {3, {3}, 3},
    {3, {2, 1, 1}, 0},    {3, {2, 2}, 2},       {4, {2, 2, 1}, 1},    {4, {3, 2}, 3},       {5, {3, 2, 1, 1}, 1},
    {5, {3, 3, 1}, 3},    {6, {3, 3, 3}, 3},    {6, {3, 2, 2, 1}, 0}, {6, {3, 3, 1, 1}, 2}, {7, {3, 3, 2, 2}, 0},
    {7, {3, 3, 3, 1}, 2}, {8, {3, 3, 3, 2}, 1}, {9, {3, 3, 3, 3}, 0}};
const std::vector<PrintedTerm> kRes4S1 = {
    {0, {}, 1},           {1, {1}, 0},          {1, {1}, 2},          {2, {1, 1}, 1},       {2, {2}, 3},
    {3, {2, 1, 1}, 1},    {3, {2, 2}, 3},       {4, {2, 2, 1}, 0},    {4, {2, 2, 1}, 2},    {5, {3, 2, 1, 1}, 0},
    {5, {3, 2, 1, 1}, 2}, {6, {3, 2, 2, 1}, 1}, {6, {3, 3, 1, 1}, 3}, {7, {3, 3, 2, 2}, 1}, {7, {3, 3, 3, 1}, 3},
    {8, {3, 3, 3, 2}, 0}, {8, {3, 3, 3, 2}, 2}, {9, {3, 3, 3, 3}, 1}};

void criterion_3() {
    int printed = 0, found = 0, extra = 0, sums_ok = 0, sums_total = 0;
    std::vector<std::string> extras;
    struct Case {
        int n;
        int simple;
        const std::vector<PrintedTerm>* terms;
    };
    for (const Case& cs : {Case{3, 0, &kRes3S0}, Case{3, 1, &kRes3S1}, Case{4, 0, &kRes4S0}, Case{4, 1, &kRes4S1}}) {
        auto cfg = FamilyConfig::symmetric(cs.n, cs.n - 1);
        const auto verts = cfg.vertices();
        auto res = resolution_of_simple(cfg, verts[cs.simple], cs.n * cs.n);
        std::set<std::tuple<int, GLWeight, int>> want;
        for (const auto& p : *cs.terms) {
            ++printed;
            GLWeight w = GLWeight::from_partition(p.weight, cs.n);
            want.insert({p.step, w, p.vertex});
            bool hit = false;
            for (const auto& t : res.steps[p.step])
                if (t.vertex == p.vertex && t.weight == w && t.mult >= 1) hit = true;
            found += hit;
        }
        for (size_t i = 0; i < res.steps.size(); ++i)
            for (const auto& t : res.steps[i])
                if (!want.count({static_cast<int>(i), t.weight, t.vertex})) {
                    ++extra;
                    extras.push_back("n=" + std::to_string(cs.n) + " S_" + std::to_string(cs.simple) + " step " +
                                     std::to_string(i) + ": S_" + to_string(t.weight) + "E(x)P" +
                                     std::to_string(t.vertex));
                }
        auto inv = invert_series_matrix(series_matrix(cfg));
        auto sums = alternating_sums(res, cs.n);
        for (size_t b = 0; b < verts.size(); ++b) {
            ++sums_total;
            sums_ok += sums[b] == inv[b][cs.simple];
        }
    }
    std::ostringstream d;
    d << "printed terms found " << found << "/" << printed << ", alternating sums equal the inverse " << sums_ok << "/"
      << sums_total << ", " << extra << " further computed terms cancel in the Euler characteristic";
    for (const auto& e : extras) d << "; " << e;
    report(3, found == printed && sums_ok == sums_total, "resolutions of simples", d.str());
}

using EdgeKey = std::tuple<int, int, GLWeight, std::string>;

std::multiset<EdgeKey> keys(const std::vector<QuiverEdge>& es, bool with_names) {
    std::multiset<EdgeKey> out;
    for (const auto& e : es)
        for (long long i = 0; i < e.mult; ++i) out.insert({e.src, e.dst, e.label, with_names ? e.name : ""});
    return out;
}

std::string sub(int i) { return "_" + std::to_string(i); }

void criterion_4() {
    std::vector<std::string> bad;
    auto L = [](std::initializer_list<int> p, int n) { return GLWeight::from_partition(Partition(p), n); };
    auto expect = [&](const std::string& what, const std::multiset<EdgeKey>& got, const std::multiset<EdgeKey>& want) {
        if (got != want) bad.push_back(what);
    };

    // Beilinson: alpha_i(E) from i to i+1, relations alpha_i alpha_{i+1}(wedge^2 E)
    for (int n = 2; n <= 6; ++n) {
        auto q = build_named("beilinson", {n});
        std::multiset<EdgeKey> a, r;
        for (int i = 0; i + 1 < n; ++i) a.insert({i, i + 1, L({1}, n), "α" + sub(i)});
        for (int i = 0; i + 2 < n; ++i) r.insert({i, i + 2, L({1, 1}, n), "α" + sub(i) + "α" + sub(i + 1)});
        expect("beilinson arrows n=" + std::to_string(n), keys(q.arrows, true), a);
        expect("beilinson relations n=" + std::to_string(n), keys(q.relations, true), r);
    }

    // Grass_2(4) Kapranov display
    {
        auto q = build_named("kapranov", {2, 4});
        auto v = [&](std::initializer_list<int> p) { return q.index_of(Partition(p)); };
        std::multiset<EdgeKey> a{{v({1}), v({}), L({1}, 4), "α_1"},         {v({1, 1}), v({1}), L({1}, 4), "α_2"},
                                 {v({2}), v({1}), L({1}, 4), "α_3"},        {v({2, 1}), v({1, 1}), L({1}, 4), "α_4"},
                                 {v({2, 1}), v({2}), L({1}, 4), "α_5"},     {v({2, 2}), v({2, 1}), L({1}, 4), "α_6"}};
        std::multiset<EdgeKey> r{{v({2}), v({}), L({1, 1}, 4), "α_1α_3"},
                                 {v({1, 1}), v({}), L({2}, 4), "α_1α_2"},
                                 {v({2, 2}), v({2}), L({1, 1}, 4), "α_5α_6"},
                                 {v({2, 2}), v({1, 1}), L({2}, 4), "α_4α_6"},
                                 {v({2, 1}), v({1}), L({2}, 4), "α_2α_4−α_3α_5"},
                                 {v({2, 1}), v({1}), L({1, 1}, 4), "α_2α_4−α_3α_5"}};
        expect("kapranov arrows", keys(q.arrows, true), a);
        expect("kapranov relations", keys(q.relations, true), r);
        if (q.vertices.size() != 6) bad.push_back("kapranov vertex count");
    }

    // maximal-minor symmetric quiver; terms that make no sense at an end vertex are dropped
    for (int n = 2; n <= 6; ++n) {
        auto q = build_named("sym_maxminor", {n});
        std::multiset<EdgeKey> a, r;
        for (int i = 0; i + 1 < n; ++i) {
            a.insert({i, i + 1, L({1}, n), "α" + sub(i)});
            a.insert({i + 1, i, L({1}, n), "β" + sub(i)});
        }
        for (int i = 0; i + 2 < n; ++i) {
            r.insert({i, i + 2, L({1, 1}, n), "α" + sub(i) + "α" + sub(i + 1)});
            r.insert({i + 2, i, L({1, 1}, n), "β" + sub(i + 1) + "β" + sub(i)});
        }
        for (int i = -1; i + 1 < n; ++i) {
            std::string nm;
            if (i >= 0) nm += "β" + sub(i) + "α" + sub(i);
            if (i + 2 < n) nm += (nm.empty() ? "" : "+") + std::string("α") + sub(i + 1) + "β" + sub(i + 1);
            r.insert({i + 1, i + 1, L({2}, n), nm});
        }
        expect("sym_maxminor arrows n=" + std::to_string(n), keys(q.arrows, true), a);
        expect("sym_maxminor relations n=" + std::to_string(n), keys(q.relations, true), r);
    }

    // rational normal curve, n = 2
    for (int d = 2; d <= 5; ++d) {
        auto q = build_named("rational_curve", {2, d});
        std::multiset<EdgeKey> a{{0, 1, L({d - 1}, 2), "β"}, {1, 0, L({1}, 2), "α"}};
        std::multiset<EdgeKey> r{{1, 1, L({d - 1, 1}, 2), "αβ"}, {0, 0, L({d - 1, 1}, 2), "βα"}};
        expect("rational_curve arrows d=" + std::to_string(d), keys(q.arrows, true), a);
        expect("rational_curve relations d=" + std::to_string(d), keys(q.relations, true), r);
    }

    // wedge^3 C^6: alpha(E) from i to i-1, beta(C) from i to i+3
    {
        auto q = build_named("wedge_rank", {6, 3});
        std::multiset<EdgeKey> a, r, rl;
        for (int i = 1; i <= 6; ++i) a.insert({i, i - 1, L({1}, 6), ""});
        for (int i = 0; i + 3 <= 6; ++i) a.insert({i, i + 3, L({}, 6), ""});
        for (int i = 2; i <= 6; ++i) r.insert({i, i - 2, L({1, 1}, 6), ""});
        for (int i = 0; i + 4 <= 6; ++i) {
            r.insert({i, i + 4, L({1, 1}, 6), ""});
            rl.insert({i, i + 4, L({1, 1}, 6), "βαβα+αβαβ"});
        }
        expect("wedge_rank arrows", keys(q.arrows, false), a);
        expect("wedge_rank relations", keys(q.relations, false), r);
        std::multiset<EdgeKey> long_named;
        for (const auto& k : keys(q.relations, true))
            if (std::get<3>(k) == "βαβα+αβαβ") long_named.insert(k);
        expect("wedge_rank long relation names", long_named, rl);
        if (q.vertices.size() != 7) bad.push_back("wedge_rank vertex count");
    }

    std::ostringstream d;
    d << "Beilinson n=2..6, Grass_2(4) Kapranov (6 arrows, 5 relation bullets), maximal-minor n=2..6, "
         "rational normal curve d=2..5, wedge^3 C^6";
    if (bad.empty()) d << ": all match";
    for (const auto& b : bad) d << "; mismatch in " << b;
    report(4, bad.empty(), "quiver fixtures", d.str());
}

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    int pairs = 0, bad = 0;
    for (auto [n, r] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 3}})
        for (auto cfg : {FamilyConfig::symmetric(n, r), FamilyConfig::skew(n, r)})
            for (const auto& a : cfg.vertices())
                for (const auto& b : cfg.vertices()) {
                    auto g = ext_simples(cfg, a, b, 2);
                    IrrepDecomposition zero(n);
                    ++pairs;
                    if (!(ext1_closed(cfg, a, b) == (g.count(1) ? g.at(1) : zero))) ++bad;
                    if (!(ext2_closed(cfg, a, b) == (g.count(2) ? g.at(2) : zero))) ++bad;
                }
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << pairs << " vertex pairs, " << bad << " mismatches, " << fmt_time(dt) << " (limit " << kLimitC5 << " s)";
    report(5, bad == 0 && dt < kLimitC5, "closed forms vs engine", d.str());
}

void criterion_6() {
    int cells = 0, bad = 0;
    for (auto [tag, delta] :
         {std::pair{TensorSquareTag::sym2, Partition{2}}, std::pair{TensorSquareTag::wedge2, Partition{1, 1}}})
        for (int s = 0; s <= 4; ++s)
            for (int m = 1; m <= 5; ++m) {
                IrrepDecomposition hooks(m);
                for (const auto& p : wedge_plethysm_hooks(s, tag))
                    if (p.length() <= m) hooks.add(GLWeight::from_partition(p, m), 1);
                ++cells;
                if (!(hooks == wedge_plethysm_general(delta, s, m))) ++bad;
            }
    IrrepDecomposition want(6);
    want.add(GLWeight{2, 2, 1, 1, 0, 0}, 1);
    want.add(GLWeight{1, 1, 1, 1, 1, 1}, 1);
    const bool w33 = wedge_plethysm_general({1, 1, 1}, 2, 6) == want;
    std::ostringstream d;
    d << "hooks vs general " << (cells - bad) << "/" << cells << "; wedge^2 wedge^3 C^6 = S_(2,2,1,1) + S_(1^6): "
      << (w33 ? "yes" : "no");
    report(6, bad == 0 && w33, "plethysm", d.str());
}

void criterion_7() {
    int cases = 0, bad = 0;
    std::string first;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int r = 0; r < n; ++r)
                for (const auto& alpha : enumerate_box(r, n - r)) {
                    ++cases;
                    auto terms = complex_terms(m, n, r, alpha, 1);
                    const int t = alpha.length();
                    BiFreeTerm f0, f1;
                    if (alpha.length() <= m) f0.push_back({alpha, GLWeight::zero(n), 1, alpha.area()});
                    const int c = r + 1 - t;
                    if (r + 1 <= m) {
                        std::vector<int> g = alpha.parts();
                        g.insert(g.end(), c, 1);
                        std::vector<int> f(n - c, 0);
                        f.insert(f.end(), c, -1);
                        f1.push_back({Partition(g), GLWeight(f), 1, alpha.area() + c});
                    }
                    if (terms[0] != f0 || terms[1] != f1) {
                        ++bad;
                        if (first.empty())
                            first = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                    " alpha=" + to_string(alpha);
                    }
                }
    std::ostringstream d;
    d << cases << " cases (m,n <= 4, r < n), " << bad << " mismatches";
    if (!first.empty()) d << ", first at " << first;
    report(7, bad == 0, "presentation theorem", d.str());
}

void criterion_8() {
    std::vector<FamilyConfig> cfgs;
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) cfgs.push_back(FamilyConfig::symmetric(n, r));
    for (int n = 2; n <= 6; ++n)
        for (int r = 2; r <= n; r += 2) cfgs.push_back(FamilyConfig::skew(n, r));
    for (int n = 4; n <= 7; ++n)
        for (int d = 2; d <= n - 2; ++d) cfgs.push_back(FamilyConfig::tensor_antisym(n, d));
    int agree = 0, mcm = 0;
    std::vector<std::string> off;
    for (const auto& cfg : cfgs) {
        auto c = mcm_criterion(cfg);
        auto s = mcm_witness_search(cfg, kMcmDepth);
        if (c.mcm() == s.mcm()) ++agree;
        else
            off.push_back(family_name(cfg.family) + " n=" + std::to_string(cfg.n) +
                          " r=" + std::to_string(cfg.r) + " d=" + std::to_string(cfg.d));
        mcm += c.mcm();
    }
    std::ostringstream d;
    d << agree << "/" << cfgs.size() << " configurations agree at D=" << kMcmDepth << " (" << mcm
      << " maximal Cohen-Macaulay)";
    for (const auto& o : off) d << "; disagree: " << o;
    report(8, off.empty(), "MCM criterion vs witness search", d.str());
}

void criterion_9() {
    // LR
    long long lr_checked = 0, lr_bad = 0;
    for (int total = 0; total <= 8; ++total)
        for (int a = 0; a <= total; ++a)
            for (const auto& alpha : partitions_of(a))
                for (const auto& beta : partitions_of(total - a)) {
                    auto o = oracle::pieri_product(alpha, beta);
                    for (const auto& mu : partitions_of(total)) {
                        ++lr_checked;
                        auto it = o.find(mu);
                        if (lr_coefficient(mu, alpha, beta) != (it == o.end() ? 0 : it->second)) ++lr_bad;
                    }
                }
    // Hilbert series
    int hs_checked = 0, hs_bad = 0;
    std::vector<FamilyConfig> cfgs;
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r < n; ++r) cfgs.push_back(FamilyConfig::symmetric(n, r));
    cfgs.push_back(FamilyConfig::skew(3, 2));
    cfgs.push_back(FamilyConfig::skew(4, 2));
    for (const auto& cfg : cfgs)
        for (const auto& a : cfg.vertices())
            for (const auto& b : cfg.vertices()) {
                ++hs_checked;
                auto want = oracle::hom_oracle(cfg, a, b, kSeriesDepth);
                auto got = hom_series(cfg, a, b).expand(-cfg.n * cfg.n, kSeriesDepth);
                std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
                if (got != want) ++hs_bad;
            }
    // gamma enumeration
    int g_checked = 0, g_bad = 0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            GrassContext ctx(n, k);
            auto cands = brute_gamma_candidates(ctx);
            for (const auto& lam : enumerate_box(n - k, k)) {
                ++g_checked;
                std::set<std::pair<GLWeight, int>> brute, walk;
                for (const auto& g : cands) {
                    auto res = cohomology(ctx, g, GLWeight(lam.padded(n - k)));
                    if (!res.vanishes) brute.insert({g, res.degree + g.area()});
                }
                for (const auto& st : enumerate_gammas(lam, ctx)) walk.insert({st.gamma, st.t});
                if (brute != walk) ++g_bad;
            }
        }
    std::ostringstream d;
    d << "LR " << lr_checked - lr_bad << "/" << lr_checked << " triples (|mu| <= 8); Hom series "
      << hs_checked - hs_bad << "/" << hs_checked << " pairs through t^" << kSeriesDepth << " (n <= 4); gamma sets "
      << g_checked - g_bad << "/" << g_checked << " (n <= 6)";
    report(9, lr_bad == 0 && hs_bad == 0 && g_bad == 0, "oracle equivalence", d.str());
}

void criterion_10() {
    int kempf = 0, kempf_bad = 0;
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k) {
            GrassContext ctx(n, k);
            for (const auto& a : enumerate_box(k, 3))
                for (const auto& b : enumerate_box(n - k, 3)) {
                    for (int shift = 3; shift <= 4; ++shift) {
                        ++kempf;
                        GLWeight rl = GLWeight(a.padded(k)).shifted(shift);
                        GLWeight ql(b.padded(n - k));
                        std::vector<int> all(rl.entries());
                        all.insert(all.end(), ql.entries().begin(), ql.entries().end());
                        auto res = cohomology(ctx, rl, ql);
                        if (res.vanishes || res.degree != 0 || res.weight != GLWeight(all)) ++kempf_bad;
                    }
                }
        }
    // O(a) on P^1: h^0 = a+1 for a >= 0, h^1 = -a-1 for a <= -2
    int p1_bad = 0;
    GrassContext p1(2, 1);
    for (int a = -4; a <= 4; ++a) {
        auto res = cohomology(p1, GLWeight{a}, GLWeight{0});
        if (a == -1) {
            p1_bad += !res.vanishes;
            continue;
        }
        const int deg = a >= 0 ? 0 : 1;
        const int dim = a >= 0 ? a + 1 : -a - 1;
        if (res.vanishes || res.degree != deg || dim_irrep(res.weight, 2) != dim) ++p1_bad;
    }
    // Serre duality on P^3: H^i(V)* = H^{3-i}(V* (x) omega) with omega = R^3 (x) det Q*
    int serre = 0, serre_bad = 0;
    GrassContext p3(4, 1);
    for (int a = -8; a <= 4; ++a)
        for (const auto& q : enumerate_box(3, 2)) {
            ++serre;
            GLWeight ql(q.padded(3));
            auto x = cohomology(p3, GLWeight{a}, ql);
            auto y = cohomology(p3, GLWeight{-a - 3}, ql.dual().shifted(1));
            if (x.vanishes != y.vanishes) ++serre_bad;
            else if (!x.vanishes && (x.degree + y.degree != 3 || y.weight != x.weight.dual())) ++serre_bad;
        }
    std::ostringstream d;
    d << "Kempf " << kempf - kempf_bad << "/" << kempf << "; P^1 line bundles -4..4: " << (p1_bad ? "mismatch" : "exact")
      << "; Serre duality on P^3 " << serre - serre_bad << "/" << serre;
    report(10, kempf_bad == 0 && p1_bad == 0 && serre_bad == 0, "Bott sanity", d.str());
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> runs = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    for (size_t i = 0; i < runs.size(); ++i) {
        try {
            runs[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), false, "exception", e.what());
        }
    }
    std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria passed"))
              << std::endl;
    return failures ? 1 : 0;
}
