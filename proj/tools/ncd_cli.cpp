#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncd/bott.hpp"
#include "ncd/ext_engine.hpp"
#include "ncd/geometric.hpp"
#include "ncd/gl_characters.hpp"
#include "ncd/hilbert.hpp"
#include "ncd/json_io.hpp"
#include "ncd/partition.hpp"
#include "ncd/quiver.hpp"

using namespace ncd;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FamilyFlags {
    std::string family = "sym";
    int n = 0;
    int r = -1;
    int d = -1;
    std::string delta;

    void attach(CLI::App* app) {
        app->add_option("--family", family, "sym, skew, tensor_antisym, tensor_sym, kapranov or custom");
        app->add_option("--n", n, "ambient dimension")->required();
        app->add_option("--r", r, "rank of Q");
        app->add_option("--d", d, "degree for the tensor families");
        app->add_option("--delta", delta, "bundle partition for the custom family");
    }

    FamilyConfig config() const {
        auto need = [](int v, const char* flag) {
            if (v < 0) throw UsageError(std::string("missing ") + flag);
            return v;
        };
        switch (parse_family(family)) {
            case Family::symmetric: return FamilyConfig::symmetric(n, need(r, "--r"));
            case Family::skew: return FamilyConfig::skew(n, need(r, "--r"));
            case Family::tensor_antisym: return FamilyConfig::tensor_antisym(n, need(d, "--d"));
            case Family::tensor_sym: return FamilyConfig::tensor_sym(n, need(d, "--d"));
            case Family::kapranov: return FamilyConfig::kapranov(n, need(r, "--r"));
            case Family::custom: return FamilyConfig::custom(n, need(r, "--r"), parse_partition(delta));
        }
        throw UsageError("unknown family");
    }
};

// "0" or "" is the empty partition
Partition part_arg(const std::string& s) { return parse_partition(s); }

GLWeight weight_arg(const std::string& s, int rank, const char* flag) {
    if (s.empty() || s == "0") return GLWeight::zero(rank);
    auto v = parse_ints(s);
    if (static_cast<int>(v.size()) != rank)
        throw UsageError(std::string(flag) + " needs " + std::to_string(rank) + " entries");
    return GLWeight(v);
}

std::vector<int> seed_order(const std::string& s, size_t nv) {
    std::vector<int> p(nv);
    std::iota(p.begin(), p.end(), 0);
    if (s.empty()) return p;
    p = parse_ints(s);
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> id(nv);
    std::iota(id.begin(), id.end(), 0);
    if (sorted != id) throw UsageError("--seed-order must be a permutation of 0.." + std::to_string(nv - 1));
    return p;
}

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

EquivariantQuiver reorder(const EquivariantQuiver& q, const std::vector<int>& p) {
    auto inv = inverse(p);
    EquivariantQuiver out = q;
    for (size_t i = 0; i < p.size(); ++i) out.vertices[i] = q.vertices[p[i]];
    for (auto* es : {&out.arrows, &out.relations})
        for (auto& e : *es) e.src = inv[e.src], e.dst = inv[e.dst];
    return out;
}

void check_format(const std::string& fmt, std::set<std::string> allowed, const std::string& cmd) {
    if (!allowed.count(fmt)) throw UsageError("--format " + fmt + " is not available for " + cmd);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

void print_decomp_text(std::ostream& os, const IrrepDecomposition& d, const std::string& prefix) {
    for (const auto& [w, m] : d.terms) os << prefix << irrep_label(w) << " x " << m << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncd: exact computations for equivariant quivers and Grassmannian cohomology"};
    app.require_subcommand(1, 1);
    std::string format = "json";
    app.add_option("--format", format, "json, dot, text or csv")->check(CLI::IsMember({"json", "dot", "text", "csv"}));
    std::string order;

    // quiver
    auto* c_quiver = app.add_subcommand("quiver", "equivariant quiver with relation slots");
    FamilyFlags quiver_fam;
    quiver_fam.attach(c_quiver);
    std::string named;
    c_quiver->add_option("--name", named, "beilinson, kapranov, sym_maxminor, rational_curve or wedge_rank");
    c_quiver->add_option("--seed-order", order, "vertex permutation");
    c_quiver->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // ext
    auto* c_ext = app.add_subcommand("ext", "Ext between simple modules");
    FamilyFlags ext_fam;
    ext_fam.attach(c_ext);
    std::string alpha_s, beta_s;
    int t_max = 2;
    c_ext->add_option("--alpha", alpha_s);
    c_ext->add_option("--beta", beta_s);
    c_ext->add_option("--t-max", t_max);
    c_ext->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // bott
    auto* c_bott = app.add_subcommand("bott", "cohomology of S_a R* (x) S_b Q* on Grass(k, n)");
    int bn = 0, bk = 0;
    std::string r_label, q_label;
    c_bott->add_option("--n", bn)->required();
    c_bott->add_option("--k", bk)->required();
    c_bott->add_option("--r-label", r_label);
    c_bott->add_option("--q-label", q_label);
    c_bott->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // lr
    auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    std::string mu_s, la_s, lb_s;
    c_lr->add_option("--mu", mu_s);
    c_lr->add_option("--alpha", la_s);
    c_lr->add_option("--beta", lb_s);
    c_lr->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // plethysm
    auto* c_pl = app.add_subcommand("plethysm", "exterior or symmetric power of a Schur functor");
    std::string pl_delta, pl_kind = "wedge", pl_method = "general";
    int pl_s = 0, pl_m = 0;
    c_pl->add_option("--delta", pl_delta)->required();
    c_pl->add_option("--s", pl_s)->required();
    c_pl->add_option("--m", pl_m)->required();
    c_pl->add_option("--kind", pl_kind)->check(CLI::IsMember({"wedge", "sym"}));
    c_pl->add_option("--method", pl_method)->check(CLI::IsMember({"general", "hooks"}));
    c_pl->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // hilbert-matrix
    auto* c_hm = app.add_subcommand("hilbert-matrix", "matrix of Hilbert series of Hom between projectives");
    FamilyFlags hm_fam;
    hm_fam.attach(c_hm);
    bool invert = false;
    c_hm->add_flag("--invert", invert);
    c_hm->add_option("--seed-order", order);
    c_hm->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // resolution
    auto* c_res = app.add_subcommand("resolution", "projective resolution of a simple module");
    FamilyFlags res_fam;
    res_fam.attach(c_res);
    int res_vertex = 0, res_steps = 0;
    c_res->add_option("--vertex", res_vertex)->required();
    c_res->add_option("--steps", res_steps)->required();
    c_res->add_option("--seed-order", order);
    c_res->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // presentation
    auto* c_pres = app.add_subcommand("presentation", "terms of the presentation complex");
    int pm = 0, pn = 0, pr = 0, p_imax = 1;
    std::string p_alpha;
    c_pres->add_option("--m", pm)->required();
    c_pres->add_option("--n", pn)->required();
    c_pres->add_option("--r", pr)->required();
    c_pres->add_option("--alpha", p_alpha);
    c_pres->add_option("--i-max", p_imax);
    c_pres->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    // mcm-check
    auto* c_mcm = app.add_subcommand("mcm-check", "maximal Cohen-Macaulay criterion and witness search");
    FamilyFlags mcm_fam;
    mcm_fam.attach(c_mcm);
    int max_degree = 20, summand_twist = 0;
    c_mcm->add_option("--max-degree", max_degree);
    c_mcm->add_option("--summand-twist", summand_twist);
    c_mcm->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::ostringstream out;
    try {
        if (c_quiver->parsed()) {
            check_format(format, {"json", "dot", "text"}, "quiver");
            EquivariantQuiver q;
            if (!named.empty()) {
                std::vector<int> params;
                if (named == "beilinson" || named == "sym_maxminor") params = {quiver_fam.n};
                else if (named == "kapranov") params = {quiver_fam.r, quiver_fam.n};
                else params = {quiver_fam.n, quiver_fam.d};
                q = build_named(named, params);
            } else {
                q = quiver_from_ext(quiver_fam.config());
            }
            q = reorder(q, seed_order(order, q.vertices.size()));
            out << emit(q, format == "json" ? QuiverFormat::json
                           : format == "dot" ? QuiverFormat::dot
                                             : QuiverFormat::text);
        } else if (c_ext->parsed()) {
            check_format(format, {"json", "text", "csv"}, "ext");
            auto cfg = ext_fam.config();
            auto g = ext_simples(cfg, part_arg(alpha_s), part_arg(beta_s), t_max);
            if (format == "json") {
                out << to_json(g).dump(2) << "\n";
            } else if (format == "csv") {
                out << "t,weight,mult\n";
                for (const auto& [t, layer] : g)
                    for (const auto& [w, m] : layer.terms) out << t << "," << csv_quote(to_string(w)) << "," << m << "\n";
            } else {
                for (const auto& [t, layer] : g) {
                    out << "Ext^" << t << ":\n";
                    print_decomp_text(out, layer, "  ");
                }
            }
        } else if (c_bott->parsed()) {
            check_format(format, {"json", "text"}, "bott");
            if (bk < 0 || bk > bn) throw UsageError("--k must lie in 0..n");
            GrassContext ctx(bn, bk);
            auto res = cohomology(ctx, weight_arg(r_label, bk, "--r-label"), weight_arg(q_label, bn - bk, "--q-label"));
            if (format == "json") out << to_json(res).dump() << "\n";
            else if (res.vanishes) out << "all cohomology vanishes\n";
            else out << "H^" << res.degree << " = S_" << to_string(res.weight) << "E\n";
        } else if (c_lr->parsed()) {
            check_format(format, {"json", "text"}, "lr");
            out << lr_coefficient(part_arg(mu_s), part_arg(la_s), part_arg(lb_s)) << "\n";
        } else if (c_pl->parsed()) {
            check_format(format, {"json", "text", "csv"}, "plethysm");
            Partition delta = part_arg(pl_delta);
            IrrepDecomposition d(pl_m);
            if (pl_method == "hooks") {
                if (pl_kind != "wedge") throw UsageError("the hook formulas cover exterior powers only");
                TensorSquareTag tag;
                if (delta == Partition{2}) tag = TensorSquareTag::sym2;
                else if (delta == Partition{1, 1}) tag = TensorSquareTag::wedge2;
                else throw UsageError("the hook formulas need --delta 2 or 1,1");
                for (const auto& p : wedge_plethysm_hooks(pl_s, tag))
                    if (p.length() <= pl_m) d.add(GLWeight::from_partition(p, pl_m), 1);
            } else {
                d = pl_kind == "wedge" ? wedge_plethysm_general(delta, pl_s, pl_m)
                                       : sym_plethysm_general(delta, pl_s, pl_m);
            }
            if (format == "json") {
                out << to_json(d).dump(2) << "\n";
            } else if (format == "csv") {
                out << "weight,mult\n";
                for (const auto& [w, m] : d.terms) out << csv_quote(to_string(w)) << "," << m << "\n";
            } else {
                print_decomp_text(out, d, "");
            }
        } else if (c_hm->parsed()) {
            check_format(format, {"json", "text", "csv"}, "hilbert-matrix");
            auto cfg = hm_fam.config();
            auto verts = cfg.vertices();
            auto p = seed_order(order, verts.size());
            auto m = series_matrix(cfg);
            const size_t nv = verts.size();
            std::vector<std::vector<std::string>> cells(nv, std::vector<std::string>(nv));
            if (invert) {
                auto inv = invert_series_matrix(m);
                for (size_t i = 0; i < nv; ++i)
                    for (size_t j = 0; j < nv; ++j) cells[i][j] = inv[p[i]][p[j]].str();
            } else {
                for (size_t i = 0; i < nv; ++i)
                    for (size_t j = 0; j < nv; ++j) cells[i][j] = m[p[i]][p[j]].reduced().str();
            }
            if (format == "json") {
                json j;
                json vs = json::array();
                for (size_t i = 0; i < nv; ++i) vs.push_back(to_json(verts[p[i]]));
                j["family"] = family_name(cfg.family);
                j["n"] = cfg.n;
                j["vertices"] = vs;
                j["inverse"] = invert;
                j["matrix"] = cells;
                out << j.dump(2) << "\n";
            } else {
                const char* sep = format == "csv" ? "," : "  ";
                for (const auto& row : cells) {
                    for (size_t j = 0; j < row.size(); ++j)
                        out << (j ? sep : "") << (format == "csv" ? csv_quote(row[j]) : row[j]);
                    out << "\n";
                }
            }
        } else if (c_res->parsed()) {
            check_format(format, {"json", "text", "csv"}, "resolution");
            auto cfg = res_fam.config();
            auto verts = cfg.vertices();
            if (res_vertex < 0 || res_vertex >= static_cast<int>(verts.size()))
                throw UsageError("--vertex out of range");
            auto p = seed_order(order, verts.size());
            auto inv = inverse(p);
            auto res = resolution_of_simple(cfg, verts[p[res_vertex]], res_steps);
            for (auto& step : res.steps) {
                for (auto& term : step) term.vertex = inv[term.vertex];
                std::stable_sort(step.begin(), step.end(),
                                 [](const ResolutionTerm& a, const ResolutionTerm& b) { return a.vertex < b.vertex; });
            }
            if (format == "json") {
                json j;
                json vs = json::array();
                for (size_t i = 0; i < verts.size(); ++i) vs.push_back(to_json(verts[p[i]]));
                j["family"] = family_name(cfg.family);
                j["n"] = cfg.n;
                j["framing"] = "E";
                j["vertices"] = vs;
                j["simple"] = res_vertex;
                json steps = json::array();
                for (size_t i = 0; i < res.steps.size(); ++i) {
                    json terms = json::array();
                    for (const auto& term : res.steps[i])
                        terms.push_back({{"weight", term.weight.entries()}, {"vertex", term.vertex}, {"mult", term.mult}});
                    steps.push_back({{"step", i}, {"terms", terms}});
                }
                j["steps"] = steps;
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                out << "step,weight,vertex,mult\n";
                for (size_t i = 0; i < res.steps.size(); ++i)
                    for (const auto& term : res.steps[i])
                        out << i << "," << csv_quote(to_string(term.weight)) << "," << term.vertex << "," << term.mult
                            << "\n";
            } else {
                for (size_t i = 0; i < res.steps.size(); ++i) {
                    out << "step " << i << ":";
                    for (const auto& term : res.steps[i]) {
                        out << " " << irrep_label(term.weight) << "(x)P" << term.vertex;
                        if (term.mult != 1) out << "^" << term.mult;
                    }
                    out << "\n";
                }
            }
        } else if (c_pres->parsed()) {
            check_format(format, {"json", "text", "csv"}, "presentation");
            auto terms = complex_terms(pm, pn, pr, part_arg(p_alpha), p_imax);
            if (format == "json") {
                json a = json::array();
                for (size_t i = 0; i < terms.size(); ++i) {
                    json ts = json::array();
                    for (const auto& s : terms[i])
                        ts.push_back({{"g", to_json(s.g)}, {"f", s.f.entries()}, {"mult", s.mult}, {"degree", s.degree}});
                    a.push_back({{"i", i}, {"terms", ts}});
                }
                out << json{{"m", pm}, {"n", pn}, {"r", pr}, {"alpha", to_json(part_arg(p_alpha))}, {"complex", a}}.dump(2)
                    << "\n";
            } else if (format == "csv") {
                out << "i,g,f,mult,degree\n";
                for (size_t i = 0; i < terms.size(); ++i)
                    for (const auto& s : terms[i])
                        out << i << "," << csv_quote(to_string(s.g)) << "," << csv_quote(to_string(s.f)) << "," << s.mult
                            << "," << s.degree << "\n";
            } else {
                for (size_t i = 0; i < terms.size(); ++i) {
                    out << "F_" << i << ":";
                    for (const auto& s : terms[i])
                        out << " S_" << to_string(s.g) << "G(x)S_" << to_string(s.f) << "F(-" << s.degree << ")";
                    out << "\n";
                }
            }
        } else if (c_mcm->parsed()) {
            check_format(format, {"json", "text"}, "mcm-check");
            auto cfg = mcm_fam.config();
            auto crit = mcm_criterion(cfg);
            auto search = mcm_witness_search(cfg, max_degree, summand_twist);
            const bool agree = crit.mcm() == search.mcm();
            if (format == "json") {
                json s{{"kind", mcm_kind_name(search.kind)}, {"bound", search.bound}};
                if (search.kind == McmKind::witness_found) {
                    s["sym_degree"] = search.sym_degree;
                    s["mu"] = to_json(search.mu);
                    s["nu"] = to_json(search.nu);
                    s["component"] = search.component.entries();
                    s["coh_degree"] = search.coh_degree;
                }
                s["flags"] = search.flags;
                json c{{"kind", mcm_kind_name(crit.kind)}, {"value", crit.criterion_value}, {"flags", crit.flags}};
                out << json{{"family", family_name(cfg.family)}, {"n", cfg.n}, {"r", cfg.r}, {"d", cfg.d},
                            {"mcm", crit.mcm()}, {"criterion", c}, {"search", s}, {"agree", agree}}
                           .dump(2)
                    << "\n";
            } else {
                out << "criterion: " << mcm_kind_name(crit.kind) << " (value " << crit.criterion_value << ")\n";
                out << "search: " << mcm_kind_name(search.kind) << " up to degree " << search.bound << "\n";
                if (search.kind == McmKind::witness_found)
                    out << "  witness at degree " << search.sym_degree << ": mu=" << to_string(search.mu) << " nu="
                        << to_string(search.nu) << " H^" << search.coh_degree << "\n";
                out << (agree ? "agree\n" : "DISAGREE\n");
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << out.str();
    return 0;
}
