#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace ncd {

// Weakly decreasing nonnegative parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    int area() const;

    // parts padded with zeros to length m (m >= length())
    std::vector<int> padded(int m) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Integer weight of fixed rank m.
class GLWeight {
public:
    GLWeight() = default;
    explicit GLWeight(std::vector<int> e) : e_(std::move(e)) {}
    GLWeight(std::initializer_list<int> e) : e_(e) {}
    static GLWeight zero(int m) { return GLWeight(std::vector<int>(m, 0)); }
    static GLWeight from_partition(const Partition& p, int m);

    const std::vector<int>& entries() const { return e_; }
    int rank() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    bool is_dominant() const;
    int area() const;
    GLWeight shifted(int c) const;
    // dual weight: -reverse
    GLWeight dual() const;

    // (c_1,c_2,...) with c_i > 0 entries as a partition
    Partition positive_part() const;
    // negative entries read from the end, negated: (-e_m, -e_{m-1}, ...)
    Partition negative_part() const;

    auto operator<=>(const GLWeight&) const = default;

private:
    std::vector<int> e_;
};

struct Rectangle {
    int rows = 0;
    int cols = 0;
};

Partition transpose(const Partition& p);
bool contains(const Partition& big, const Partition& small);
bool fits(const Partition& p, int rows, int cols);

// area ascending, then lexicographically descending
std::vector<Partition> enumerate_box(int u, int v);
std::vector<Partition> partitions_of(int size, int max_len = -1, int max_part = -1);

Partition complement(const Partition& p, Rectangle rect);

Partition from_hook(const std::vector<int>& arms, const std::vector<int>& legs);
std::pair<std::vector<int>, std::vector<int>> to_hook(const Partition& p);

// keeps the first l columns
Partition truncate_after(const Partition& p, int l);
// deletes the first l columns
Partition drop_columns(const Partition& p, int l);

std::string to_string(const Partition& p);
std::string to_string(const GLWeight& w);
Partition parse_partition(const std::string& s);
std::vector<int> parse_ints(const std::string& s);

}  // namespace ncd
