#ifndef NCD_GL_CHARACTERS_HPP
#define NCD_GL_CHARACTERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ncd/partition.hpp"

namespace ncd {

using BigInt = boost::multiprecision::cpp_int;

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IrrepDecomposition {
    int rank = 0;
    std::map<GLWeight, long long, std::greater<>> terms;

    IrrepDecomposition() = default;
    explicit IrrepDecomposition(int m) : rank(m) {}

    void add(const GLWeight& w, long long mult);
    void merge(const IrrepDecomposition& other, long long factor = 1);
    long long multiplicity(const GLWeight& w) const;
    BigInt total_dim() const;
    bool empty() const { return terms.empty(); }
    bool operator==(const IrrepDecomposition& o) const { return rank == o.rank && terms == o.terms; }
};

enum class TensorSquareTag { sym2, wedge2, tensor_pair };

long long lr_coefficient(const Partition& mu, const Partition& alpha, const Partition& beta);
// s_alpha * s_beta restricted to results with at most max_len rows (-1 = no bound)
std::map<Partition, long long> lr_product(const Partition& alpha, const Partition& beta, int max_len = -1);

IrrepDecomposition tensor_dominant(const GLWeight& a, const GLWeight& b, int m);
IrrepDecomposition tensor_dominant(const IrrepDecomposition& a, const GLWeight& b);

BigInt dim_irrep(const GLWeight& w, int m);
BigInt dim_irrep(const Partition& p, int m);

std::vector<Partition> cauchy_layer(int d, TensorSquareTag tag);
std::vector<Partition> wedge_plethysm_hooks(int s, TensorSquareTag tag);

// number of semistandard tableaux of shape lambda and content mu
BigInt kostka(const Partition& lambda, const std::vector<int>& content);

// Monomial bound for the plethysm routines; exceeding it raises ResourceError.
void set_plethysm_limit(std::size_t max_terms);
std::size_t plethysm_limit();

// weights (exponent vectors) of the semistandard tableaux of shape delta in m letters
std::vector<std::vector<int>> schur_monomials(const Partition& delta, int m);

// Character table of a symmetric polynomial: coefficients at dominant exponents.
using DominantCharacter = std::map<std::vector<int>, BigInt, std::greater<>>;

// e_s (exterior) or h_s (symmetric) of the weight multiset, by Newton's identities
DominantCharacter layer_character(const std::vector<std::vector<int>>& weights, int m, int s, bool exterior);

IrrepDecomposition decompose_leading_term(const DominantCharacter& ch, int m);
IrrepDecomposition decompose_weyl(const DominantCharacter& ch, int m, int degree);

IrrepDecomposition wedge_plethysm_general(const Partition& delta, int s, int m);
IrrepDecomposition sym_plethysm_general(const Partition& delta, int p, int m);

}  // namespace ncd

#endif
