#include "ncd/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncd {

int EquivariantQuiver::index_of(const Partition& p) const {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    if (it == vertices.end()) throw std::invalid_argument("no vertex " + to_string(p));
    return static_cast<int>(it - vertices.begin());
}

namespace {

IrrepDecomposition collect(const std::vector<QuiverEdge>& edges, int n, int src, int dst) {
    IrrepDecomposition d(n);
    for (const auto& e : edges)
        if (e.src == src && e.dst == dst) d.add(e.label, e.mult);
    return d;
}

GLWeight lab(const Partition& p, int n) { return GLWeight::from_partition(p, n); }

std::string sub(int i) { return "_" + std::to_string(i); }

const char* kSlotNote = "relations are Hom(src,dst) slots labelled by generating sub-representations; path coefficients are not modelled";
const char* kOrderNote = "vertex order: area ascending, then lexicographic descending";

EquivariantQuiver beilinson(int n) {
    if (n < 2) throw std::invalid_argument("beilinson needs n >= 2");
    EquivariantQuiver q{"beilinson", n, {}, {}, {}, {}};
    for (int i = 0; i < n; ++i) q.vertices.push_back(Partition{n - 1 - i});
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({i, i + 1, lab({1}, n), 1, "α" + sub(i)});
    for (int i = 0; i + 2 < n; ++i)
        q.relations.push_back({i, i + 2, lab({1, 1}, n), 1, "α" + sub(i) + "α" + sub(i + 1)});
    q.notes = {kSlotNote, "vertex i is the partition (n-1-i)"};
    return q;
}

// arrows numbered by source in (area, lex ascending) order, then by target
EquivariantQuiver kapranov(int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("kapranov needs 1 <= r < n");
    EquivariantQuiver q{"kapranov", n, enumerate_box(r, n - r), {}, {}, {}};
    std::vector<int> order(q.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& x = q.vertices[a];
        const auto& y = q.vertices[b];
        if (x.area() != y.area()) return x.area() < y.area();
        return x < y;
    });
    std::map<std::pair<int, int>, std::string> names;
    int counter = 0;
    for (int s : order)
        for (int d : order) {
            const auto& big = q.vertices[s];
            const auto& small = q.vertices[d];
            if (big.area() == small.area() + 1 && contains(big, small)) {
                std::string nm = "α" + sub(++counter);
                names[{s, d}] = nm;
                q.arrows.push_back({s, d, lab({1}, n), 1, nm});
            }
        }
    for (int s : order)
        for (int d : order) {
            const auto& big = q.vertices[s];
            const auto& small = q.vertices[d];
            if (big.area() != small.area() + 2 || !contains(big, small)) continue;
            // paths big -> mid -> small, written later arrow first
            std::string nm;
            for (int m : order) {
                auto a = names.find({s, m});
                auto b = names.find({m, d});
                if (a == names.end() || b == names.end()) continue;
                if (!nm.empty()) nm += "−";
                nm += b->second + a->second;
            }
            const long long c_row = lr_coefficient(big, small, Partition{2});
            const long long c_col = lr_coefficient(big, small, Partition{1, 1});
            if (c_col) q.relations.push_back({s, d, lab({2}, n), c_col, nm});
            if (c_row) q.relations.push_back({s, d, lab({1, 1}, n), c_row, nm});
        }
    q.notes = {kSlotNote, kOrderNote};
    return q;
}

EquivariantQuiver sym_maxminor(int n) {
    if (n < 2) throw std::invalid_argument("sym_maxminor needs n >= 2");
    EquivariantQuiver q{"sym_maxminor", n, {}, {}, {}, {}};
    for (int i = 0; i < n; ++i) q.vertices.push_back(Partition(std::vector<int>(i, 1)));
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({i, i + 1, lab({1}, n), 1, "α" + sub(i)});
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({i + 1, i, lab({1}, n), 1, "β" + sub(i)});
    for (int i = 0; i + 2 < n; ++i)
        q.relations.push_back({i, i + 2, lab({1, 1}, n), 1, "α" + sub(i) + "α" + sub(i + 1)});
    for (int i = 0; i + 2 < n; ++i)
        q.relations.push_back({i + 2, i, lab({1, 1}, n), 1, "β" + sub(i + 1) + "β" + sub(i)});
    for (int v = 0; v < n; ++v) {
        std::string nm;
        if (v >= 1) nm += "β" + sub(v - 1) + "α" + sub(v - 1);
        if (v + 1 < n) nm += (nm.empty() ? "" : "+") + std::string("α") + sub(v) + "β" + sub(v);
        q.relations.push_back({v, v, lab({2}, n), 1, nm});
    }
    q.notes = {kSlotNote, "vertex i is the partition (1^i); terms that do not make sense at a vertex are dropped"};
    return q;
}

EquivariantQuiver rational_curve(int n, int d) {
    if (n != 2) throw std::invalid_argument("rational_curve is displayed only for n = 2");
    if (d < 2) throw std::invalid_argument("rational_curve needs d >= 2");
    EquivariantQuiver q{"rational_curve", n, {Partition{}, Partition{1}}, {}, {}, {}};
    q.arrows.push_back({0, 1, lab({d - 1}, n), 1, "β"});
    q.arrows.push_back({1, 0, lab({1}, n), 1, "α"});
    q.relations.push_back({1, 1, lab({d - 1, 1}, n), 1, "αβ"});
    q.relations.push_back({0, 0, lab({d - 1, 1}, n), 1, "βα"});
    q.notes = {kSlotNote, "vertex i is the partition (1^i)"};
    return q;
}

EquivariantQuiver wedge_rank(int n, int d) {
    if (n != 6 || d != 3) throw std::invalid_argument("wedge_rank is displayed only for n = 6, d = 3");
    EquivariantQuiver q{"wedge_rank", n, {}, {}, {}, {}};
    for (int i = 0; i <= n; ++i) q.vertices.push_back(Partition(std::vector<int>(i, 1)));
    for (int i = 1; i <= n; ++i) q.arrows.push_back({i, i - 1, lab({1}, n), 1, "α" + sub(i)});
    for (int i = 0; i + d <= n; ++i) q.arrows.push_back({i, i + d, lab({}, n), 1, "β" + sub(i)});
    for (int i = 2; i <= n; ++i)
        q.relations.push_back({i, i - 2, lab({1, 1}, n), 1, "α" + sub(i) + "α" + sub(i - 1)});
    for (int i = 0; i + 2 * d - 2 <= n; ++i)
        q.relations.push_back({i, i + 2 * d - 2, lab({1, 1}, n), 1, "βαβα+αβαβ"});
    q.notes = {kSlotNote, "vertex i is labelled (1^i); the display has vertices 0..n"};
    return q;
}

}  // namespace

IrrepDecomposition EquivariantQuiver::arrow_labels(int src, int dst) const { return collect(arrows, n, src, dst); }
IrrepDecomposition EquivariantQuiver::relation_labels(int src, int dst) const {
    return collect(relations, n, src, dst);
}

EquivariantQuiver build_named(const std::string& name, const std::vector<int>& p) {
    auto need = [&](size_t k) {
        if (p.size() != k) throw std::invalid_argument(name + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "beilinson") return need(1), beilinson(p[0]);
    if (name == "kapranov") return need(2), kapranov(p[0], p[1]);
    if (name == "sym_maxminor") return need(1), sym_maxminor(p[0]);
    if (name == "rational_curve") return need(2), rational_curve(p[0], p[1]);
    if (name == "wedge_rank") return need(2), wedge_rank(p[0], p[1]);
    throw std::invalid_argument("unknown quiver '" + name + "'");
}

EquivariantQuiver quiver_from_ext(const FamilyConfig& cfg) {
    EquivariantQuiver q{family_name(cfg.family), cfg.n, cfg.vertices(), {}, {}, {}};
    const int nv = static_cast<int>(q.vertices.size());
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b) {
            auto ext = ext_simples(cfg, q.vertices[a], q.vertices[b], 2);
            // a class in Ext^t(S_a, S_b) is a path from b to a
            if (auto it = ext.find(1); it != ext.end())
                for (const auto& [w, m] : it->second.terms) q.arrows.push_back({b, a, w, m, ""});
            if (auto it = ext.find(2); it != ext.end())
                for (const auto& [w, m] : it->second.terms) q.relations.push_back({b, a, w, m, ""});
        }
    q.notes = {kSlotNote, kOrderNote, "arrows from Ext^1, relations from Ext^2, labels in the E-framing"};
    return q;
}

std::string irrep_label(const GLWeight& w) {
    if (!w.is_dominant() || (w.rank() > 0 && w[w.rank() - 1] < 0)) return "S_" + to_string(w) + "E";
    Partition p(w.entries());
    if (p.empty()) return "C";
    if (p == Partition{1}) return "E";
    if (p[0] == 1) return "∧^" + std::to_string(p.length()) + "E";
    if (p.length() == 1) return "S_" + std::to_string(p[0]) + "E";
    return "S_" + to_string(p) + "E";
}

json quiver_to_json(const EquivariantQuiver& q) {
    auto edges = [](const std::vector<QuiverEdge>& es) {
        json a = json::array();
        for (const auto& e : es) {
            json j{{"src", e.src}, {"dst", e.dst}, {"weight", e.label.entries()}, {"mult", e.mult}};
            if (!e.name.empty()) j["name"] = e.name;
            a.push_back(j);
        }
        return a;
    };
    json verts = json::array();
    for (const auto& v : q.vertices) verts.push_back(to_json(v));
    return json{{"n", q.n},           {"family", q.family},          {"vertices", verts},
                {"arrows", edges(q.arrows)}, {"relations", edges(q.relations)}, {"framing", "E"},
                {"notes", q.notes}};
}

EquivariantQuiver quiver_from_json(const json& j) {
    EquivariantQuiver q;
    q.n = j.at("n").get<int>();
    q.family = j.at("family").get<std::string>();
    for (const auto& v : j.at("vertices")) q.vertices.push_back(partition_from_json(v));
    auto edges = [](const json& a) {
        std::vector<QuiverEdge> out;
        for (const auto& e : a)
            out.push_back({e.at("src").get<int>(), e.at("dst").get<int>(),
                           GLWeight(e.at("weight").get<std::vector<int>>()), e.at("mult").get<long long>(),
                           e.value("name", std::string())});
        return out;
    };
    q.arrows = edges(j.at("arrows"));
    q.relations = edges(j.at("relations"));
    q.notes = j.value("notes", std::vector<std::string>{});
    return q;
}

namespace {

std::string vname(const Partition& p) { return p.empty() ? "∅" : to_string(p); }

std::string edge_text(const QuiverEdge& e) {
    std::string s = e.name + "(" + irrep_label(e.label) + ")";
    if (e.mult != 1) s += " x" + std::to_string(e.mult);
    return s;
}

}  // namespace

std::string emit(const EquivariantQuiver& q, QuiverFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case QuiverFormat::json:
            os << quiver_to_json(q).dump(2) << "\n";
            break;
        case QuiverFormat::dot:
            os << "digraph quiver {\n  rankdir=LR;\n";
            for (size_t i = 0; i < q.vertices.size(); ++i)
                os << "  v" << i << " [label=\"" << vname(q.vertices[i]) << "\"];\n";
            for (const auto& e : q.arrows)
                os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << irrep_label(e.label) << " × " << e.mult
                   << "\"];\n";
            for (const auto& e : q.relations)
                os << "  v" << e.src << " -> v" << e.dst << " [style=dashed, label=\"" << irrep_label(e.label)
                   << " × " << e.mult << "\"];\n";
            os << "}\n";
            break;
        case QuiverFormat::text:
            os << q.family << " quiver, n=" << q.n << ", " << q.vertices.size() << " vertices\n";
            for (size_t i = 0; i < q.vertices.size(); ++i) os << "  " << i << ": " << vname(q.vertices[i]) << "\n";
            os << "arrows:\n";
            for (const auto& e : q.arrows)
                os << "  " << vname(q.vertices[e.src]) << " -> " << vname(q.vertices[e.dst]) << ": " << edge_text(e)
                   << "\n";
            os << "relations:\n";
            for (const auto& e : q.relations)
                os << "  • Hom(" << vname(q.vertices[e.src]) << "," << vname(q.vertices[e.dst])
                   << "): " << edge_text(e) << "\n";
            for (const auto& nt : q.notes) os << "# " << nt << "\n";
            break;
    }
    return os.str();
}

}  // namespace ncd
