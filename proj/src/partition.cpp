#include "ncd/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition is not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::area() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int m) const {
    if (m < length()) throw std::invalid_argument("partition longer than requested rank");
    std::vector<int> v(parts_);
    v.resize(m, 0);
    return v;
}

GLWeight GLWeight::from_partition(const Partition& p, int m) { return GLWeight(p.padded(m)); }

bool GLWeight::is_dominant() const {
    for (size_t i = 1; i < e_.size(); ++i)
        if (e_[i] > e_[i - 1]) return false;
    return true;
}

int GLWeight::area() const { return std::accumulate(e_.begin(), e_.end(), 0); }

GLWeight GLWeight::shifted(int c) const {
    std::vector<int> v(e_);
    for (auto& x : v) x += c;
    return GLWeight(v);
}

GLWeight GLWeight::dual() const {
    std::vector<int> v(e_.rbegin(), e_.rend());
    for (auto& x : v) x = -x;
    return GLWeight(v);
}

Partition GLWeight::positive_part() const {
    std::vector<int> v;
    for (int x : e_)
        if (x > 0) v.push_back(x);
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

Partition GLWeight::negative_part() const {
    std::vector<int> v;
    for (int x : e_)
        if (x < 0) v.push_back(-x);
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> t(p[0], 0);
    for (int x : p.parts())
        for (int j = 0; j < x; ++j) ++t[j];
    return Partition(t);
}

bool contains(const Partition& big, const Partition& small) {
    if (small.length() > big.length()) return false;
    for (int i = 0; i < small.length(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

bool fits(const Partition& p, int rows, int cols) {
    return p.length() <= rows && (p.empty() || p[0] <= cols);
}

namespace {

void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        cur.push_back(x);
        gen_partitions(remaining - x, x, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int size, int max_len, int max_part) {
    std::vector<Partition> out;
    if (size < 0) return out;
    if (max_len < 0) max_len = size;
    if (max_part < 0) max_part = size;
    std::vector<int> cur;
    gen_partitions(size, max_part, max_len, cur, out);
    return out;
}

std::vector<Partition> enumerate_box(int u, int v) {
    if (u < 0 || v < 0) throw std::invalid_argument("negative rectangle");
    std::vector<Partition> out;
    for (int a = 0; a <= u * v; ++a) {
        // partitions_of already yields lexicographically descending order
        auto layer = partitions_of(a, u, v);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Partition complement(const Partition& p, Rectangle rect) {
    if (!fits(p, rect.rows, rect.cols)) throw std::invalid_argument("partition does not fit the rectangle");
    std::vector<int> c(rect.rows);
    for (int i = 0; i < rect.rows; ++i) c[i] = rect.cols - p[rect.rows - 1 - i];
    return Partition(c);
}

Partition from_hook(const std::vector<int>& arms, const std::vector<int>& legs) {
    if (arms.size() != legs.size()) throw std::invalid_argument("hook coordinates of different length");
    for (size_t i = 1; i < arms.size(); ++i)
        if (arms[i] >= arms[i - 1] || legs[i] >= legs[i - 1])
            throw std::invalid_argument("hook coordinates must be strictly decreasing");
    for (size_t i = 0; i < arms.size(); ++i)
        if (arms[i] < 0 || legs[i] < 0) throw std::invalid_argument("negative hook coordinate");
    const int d = static_cast<int>(arms.size());
    if (d == 0) return {};
    const int len = legs[0] + 1;
    std::vector<int> parts(len, 0);
    for (int i = 0; i < d; ++i) parts[i] = arms[i] + i + 1;
    // below the diagonal square rows are filled by the legs
    for (int row = d; row < len; ++row) {
        int cnt = 0;
        for (int j = 0; j < d; ++j)
            if (legs[j] + j >= row) ++cnt;
        parts[row] = cnt;
    }
    return Partition(parts);
}

std::pair<std::vector<int>, std::vector<int>> to_hook(const Partition& p) {
    Partition t = transpose(p);
    std::vector<int> a, b;
    for (int i = 0; i < p.length() && p[i] > i; ++i) {
        a.push_back(p[i] - i - 1);
        b.push_back(t[i] - i - 1);
    }
    return {a, b};
}

Partition truncate_after(const Partition& p, int l) {
    if (l < 0) throw std::invalid_argument("negative column count");
    std::vector<int> v;
    for (int x : p.parts()) v.push_back(std::min(x, l));
    return Partition(v);
}

Partition drop_columns(const Partition& p, int l) {
    if (l < 0) throw std::invalid_argument("negative column count");
    std::vector<int> v;
    for (int x : p.parts()) v.push_back(x - std::min(x, l));
    return Partition(v);
}

namespace {
std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}
}  // namespace

std::string to_string(const Partition& p) { return join(p.parts()); }
std::string to_string(const GLWeight& w) { return join(w.entries()); }

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int x = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        v.push_back(x);
    }
    return v;
}

Partition parse_partition(const std::string& s) { return Partition(parse_ints(s)); }

}  // namespace ncd
