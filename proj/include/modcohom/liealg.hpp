#pragma once
// Structure data for sl3 and gl3: basis labels, integer structure constants,
// per-basis-element weights. Basis order is e1,e2,e3,h1,h2,f1,f2,f3 (gl3
// appends the central z); cochain indexing depends on this order staying put.

#include "modcohom/weight.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace modcohom {

struct LieAlgebraSpec {
    std::string name;                 // "sl3" or "gl3"
    std::vector<std::string> basis;
    std::vector<Weight> weights;      // weight of each basis element
    // bracket_table[i][j] = [x_i, x_j] as list of (k, integer coefficient)
    std::vector<std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>> bracket_table;

    std::size_t dim() const { return basis.size(); }
    const std::vector<std::pair<std::size_t, std::int64_t>>& bracket(std::size_t i, std::size_t j) const {
        return bracket_table[i][j];
    }
    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;
};

const LieAlgebraSpec& sl3_spec();
const LieAlgebraSpec& gl3_spec();

// Antisymmetry, Jacobi over Z, and ad(h_i) eigenvalues against the stored
// weights; throws InternalInconsistency on violation. Run once per spec at
// construction and directly by the tests.
void validate_structure(const LieAlgebraSpec& g);

}  // namespace modcohom
