#pragma once
// Restricted representations of sl3/gl3 over F_p: the p^3-dimensional Verma
// module W(r,s) with its explicit eight action formulas, Weyl modules V(r,s)
// as quotients by the submodule generated by v_{r+1,0,0} and v_{0,s+1,0},
// simple modules by iterated singular-vector quotients, duals, and induced
// modules H0(r,s) = dual of V(s,r).
//
// Weights of basis vectors are exact integers; only the action matrices live
// mod p. That is what makes divisibility by p of a cochain weight meaningful.

#include "modcohom/gfp.hpp"
#include "modcohom/liealg.hpp"
#include "modcohom/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace modcohom {

struct Representation {
    LieAlgebraSpec algebra;
    PrimeField field;
    std::size_t dim = 0;
    std::vector<MatrixGFp> actions;  // one per algebra basis element, y = A x
    std::vector<Weight> weights;     // integer weight of each basis vector
    Weight highest_weight;
    std::string label;
};

struct Character {
    std::map<Weight, std::size_t> mult;

    std::size_t total() const;
    bool weyl_symmetric() const;
    friend bool operator==(const Character&, const Character&) = default;
};

Character character(const Representation& rep);
Character tensor_character(const Character& x, const Character& y);
Character negated_character(const Character& x);  // weights negated
Character sum_character(const Character& x, const Character& y);

Representation trivial_module(const LieAlgebraSpec& g, PrimeField f);

// Basis v_{i,j,t}, 0 <= i,j,t <= p-1, flat index i*p^2 + j*p + t.
Representation verma_module(PrimeField f, std::int64_t r, std::int64_t s);
std::size_t verma_index(std::uint32_t p, std::int64_t i, std::int64_t j, std::int64_t t);

SubspaceBasis generated_submodule(const Representation& rep,
                                  const std::vector<std::vector<std::uint32_t>>& seeds);

// sub must be stable under every action (NotASubmodule) and spanned by
// integer-weight vectors (NotWeightHomogeneous). Quotient coordinates are the
// non-pivot columns of sub's echelon form.
Representation quotient_module(const Representation& rep, const SubspaceBasis& sub,
                               const std::string& label = "");
// Coordinates of the image of an ambient vector in the quotient.
std::vector<std::uint32_t> project_to_quotient(const SubspaceBasis& sub,
                                               const std::vector<std::uint32_t>& v);

// The Weyl module V(r,s) is the submodule generated by the highest weight
// vector under all divided powers of the root elements inside the tensor
// product of divided-power spaces D^r(std) (x) D^s(std*); this carries the
// full integral (hyperalgebra) structure that plain p-restricted generation
// misses. Whenever the canonical map from the Verma module W(r,s),
// v_{i,j,t} -> F3^(t) F2^(j) F1^(i) . u, is onto, the module is handed back
// in Verma-quotient coordinates with the kernel exposed as the true I(r,s).
struct WeylRealization {
    Representation module;
    Representation verma;
    MatrixGFp verma_to_weyl;  // module.dim x p^3, intertwines the actions
    SubspaceBasis kernel;     // ker(verma_to_weyl) = I(r,s)
    bool verma_quotient = false;
};
WeylRealization weyl_realization(PrimeField f, std::int64_t r, std::int64_t s);

Representation weyl_module(PrimeField f, std::int64_t r, std::int64_t s);

// For each weight != highest weight, the joint kernel of the e1 and e2
// actions on that weight space, when nonzero. Basis vectors are returned in
// ambient coordinates.
std::vector<std::pair<Weight, SubspaceBasis>> singular_vectors(const Representation& rep);

Representation simple_module(PrimeField f, std::int64_t r, std::int64_t s);

// action(x) -> -action(x)^T, weights negated, highest weight -w0(old).
Representation dual_module(const Representation& rep);

Representation induced_module(PrimeField f, std::int64_t r, std::int64_t s);

// View an sl3 module as a gl3 module with the central z acting by zero.
Representation as_gl3_module(const Representation& rep);

Representation direct_sum(const Representation& x, const Representation& y);

// Violations of the four representation axioms (bracket compatibility,
// weight compatibility of every action entry, h-eigenvalues, e/f p-th power
// nilpotency); empty means pass.
std::vector<std::string> check_representation(const Representation& rep);

}  // namespace modcohom
