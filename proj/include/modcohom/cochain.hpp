#pragma once
// The cochain complex Hom(Lambda^n g, M) = Lambda^n g* (x) M with its
// coboundary matrices and torus-weight grading.
//
// Basis of degree n: pairs (S, m) with S an n-element subset of the algebra
// basis (stored as a bitmask, subsets enumerated in increasing mask order,
// i.e. colex) and m a module basis index varying fastest. The weight of
// (S, m) is -sum of the basis weights over S plus the weight of m, over Z.
//
// Coboundary, for phi in C^n:
//   (d phi)(x_0..x_n) = sum_i (-1)^i x_i phi(..x^_i..)
//                     + sum_{i<j} (-1)^{i+j} phi([x_i,x_j], ..x^_i..x^_j..)
// Any consistent global sign convention gives the same ranks; this one is
// pinned by fixture tests on cocycle-space dimensions.
//
// Construction verifies that every coboundary entry connects equal weights
// and that d.d = 0 on every weight block; together these give d.d = 0 on the
// whole complex.

#include "modcohom/repr.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace modcohom {

struct CochainIndex {
    std::uint32_t subset_mask = 0;
    std::uint32_t module_index = 0;
    friend bool operator==(const CochainIndex&, const CochainIndex&) = default;
};

struct DegreeData {
    std::vector<CochainIndex> basis;
    std::vector<Weight> weights;                      // per basis element
    std::map<Weight, std::vector<std::uint32_t>> blocks;
    MatrixGFp d;                                      // C^n -> C^{n+1}
};

struct GradedComplex {
    LieAlgebraSpec algebra;
    PrimeField field;
    std::string module_label;
    std::size_t module_dim = 0;
    bool restricted = false;
    std::vector<DegreeData> degrees;  // 0 .. dim g; degrees[dim g].d is a map to 0

    std::size_t dim_cochain(std::size_t n) const { return degrees[n].basis.size(); }
    std::size_t dim_block(std::size_t n, Weight mu) const;
};

GradedComplex build_complex(const LieAlgebraSpec& g, const Representation& module);

// Subcomplex spanned by basis elements whose integer weight is componentwise
// divisible by p.
GradedComplex restrict_to_pXT(const GradedComplex& cx);

// d^n restricted to the weight-mu block: rows are the mu-block of degree n+1.
MatrixGFp block_matrix(const GradedComplex& cx, std::size_t degree, Weight mu);

// Full sparse product check d^{n+1} d^n = 0 for every n, no weight blocking.
bool d_squared_is_zero_full(const GradedComplex& cx);

// Sparse triplet text dump ("row col value" lines) of one weight block.
void write_block_triplets(const GradedComplex& cx, std::size_t degree, Weight mu,
                          std::ostream& os);

}  // namespace modcohom
