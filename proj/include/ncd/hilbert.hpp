#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncd/ext_engine.hpp"

namespace ncd {

// Sparse Laurent polynomial in t with big-integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { if (c) c_[0] = c; }
    static LaurentPoly monomial(const BigInt& c, int e);
    // 1 - t^a
    static LaurentPoly one_minus(int a);
    static LaurentPoly from_coeffs(const std::map<int, BigInt>& c);

    const std::map<int, BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int low() const { return c_.begin()->first; }
    int high() const { return c_.rbegin()->first; }
    BigInt coeff(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly shifted(int e) const;
    LaurentPoly pow(int k) const;
    bool operator==(const LaurentPoly&) const = default;

    // ascending exponents, e.g. "1+10t^2+t^4"
    std::string str() const;

private:
    std::map<int, BigInt> c_;
};

// exact quotient a / b, or nothing when b does not divide a
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// numerator / prod (1 - t^a)^m
struct HilbertSeries {
    LaurentPoly num;
    std::map<int, int> den;

    // cancels every (1 - t^a) factor that divides the numerator
    HilbertSeries reduced() const;
    // same function written over the given denominator; throws if it is not a multiple
    HilbertSeries with_denominator(const std::map<int, int>& target) const;
    // power-series coefficients for exponents lo..hi
    std::map<int, BigInt> expand(int lo, int hi) const;
    std::string str() const;
    bool operator==(const HilbertSeries& o) const;
};

using SeriesMatrix = std::vector<std::vector<HilbertSeries>>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// graded pieces of H^0(S_alpha Q (x) S_beta Q* (x) Sym_d(bundle)), exponent |delta| d + |alpha| - |beta|
std::map<int, BigInt> hom_coefficients(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta,
                                       int d_max);
HilbertSeries hom_series(const FamilyConfig& cfg, const Partition& alpha, const Partition& beta);
// generators in degree 0
HilbertSeries module_series(const FamilyConfig& cfg, const Partition& alpha);
SeriesMatrix series_matrix(const FamilyConfig& cfg);

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fraction-free determinant
LaurentPoly bareiss_det(PolyMatrix m);
PolyMatrix invert_series_matrix(const SeriesMatrix& m);

struct ResolutionTerm {
    GLWeight weight;
    int vertex = 0;
    long long mult = 0;
    bool operator==(const ResolutionTerm&) const = default;
};

struct ResolutionTable {
    std::vector<Partition> vertices;
    std::vector<std::vector<ResolutionTerm>> steps;
};

ResolutionTable resolution_of_simple(const FamilyConfig& cfg, const Partition& alpha, int steps);
// sum_i (-1)^i mult dim t^{|weight|} at each vertex
std::vector<LaurentPoly> alternating_sums(const ResolutionTable& res, int n);

}  // namespace ncd
