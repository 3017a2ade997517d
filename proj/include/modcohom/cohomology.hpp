#pragma once
// Cohomology dimensions per degree and weight, composition-factor
// decomposition by greedy dominance-maximal character subtraction, duality
// and Euler cross-checks, and the sl3 -> gl3 degree-shift sum.
//
// Every block dimension is computed along two routes (kernel basis count
// minus previous rank, and cochain/cocycle counting) and the complex is
// required to satisfy b(im d) inside ker d blockwise; disagreement throws
// InternalInconsistency, which the CLI maps to exit code 3.

#include "modcohom/cochain.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modcohom {

struct CohomFactor {
    Weight weight;  // untwisted restricted dominant weight
    int twist = 1;
    std::size_t mult = 0;
    friend bool operator==(const CohomFactor&, const CohomFactor&) = default;
};

struct DegreeCohomology {
    std::size_t total = 0;
    std::map<Weight, std::size_t> weight_dims;  // only nonzero entries
    std::vector<CohomFactor> factors;
    std::map<Weight, std::size_t> residual;  // leftover weights (original, twisted coords)
};

struct CohomologyReport {
    std::uint32_t p = 0;
    std::string algebra;
    std::string module_family;
    Weight module_weight{0, 0};
    std::string module_label;
    std::vector<DegreeCohomology> degrees;  // index = degree
    bool decomposed = false;

    std::size_t total_dim(std::size_t n) const { return degrees[n].total; }
    bool all_zero() const;
};

CohomologyReport cohomology(const GradedComplex& cx, unsigned threads = 1);

// Characters of simple modules at a fixed prime, built on demand.
class CharacterTable {
public:
    explicit CharacterTable(PrimeField f) : field_(f) {}
    const Character& at(Weight w);
    PrimeField field() const { return field_; }

private:
    PrimeField field_;
    std::map<Weight, Character> cache_;
};

struct CharacterDecomposition {
    std::vector<CohomFactor> factors;
    std::map<Weight, std::size_t> residual;  // in the same coordinates as the input
};

// Greedy subtraction of simple characters at dominance-maximal weights. A
// non-dominant maximal weight throws NonDominantMaximal; a failed subtraction
// leaves the remainder in residual instead of guessing.
CharacterDecomposition decompose_character(std::map<Weight, std::size_t> multiset,
                                           CharacterTable& table);

// Untwist the report's weights (all divisible by p, or WeightOutOfRange),
// decompose each degree, and record factors with twist level 1.
void decompose(CohomologyReport& report, CharacterTable& table);

// dim H^n(M*) == dim H^{dim g - n}(M) for all n, with weight dims mirrored
// under negation.
bool verify_duality(const LieAlgebraSpec& g, const Representation& module, unsigned threads = 1);

// Degree n of the result = degrees n and n-1 of the sl3 report, summed.
CohomologyReport gl3_from_sl3(const CohomologyReport& sl3_report);

// Alternating sums of dimensions vanish, in total and per weight.
bool euler_check(const CohomologyReport& report);

// Necessary dimension conditions for a long exact sequence attached to
// 0 -> A -> B -> C -> 0 (characters must satisfy ch B = ch A + ch C, else
// CharacterMismatch): non-negative alternating partial sums ending at zero.
bool ses_consistency(const Representation& a, const Representation& b, const Representation& c,
                     unsigned threads = 1);

struct ModuleSelector {
    std::string family;  // trivial | simple | weyl | induced | verma
    std::int64_t r = 0;
    std::int64_t s = 0;

    std::string str() const;
    friend bool operator==(const ModuleSelector&, const ModuleSelector&) = default;
};

// Parses "trivial" or "family:r,s".
ModuleSelector parse_selector(const std::string& text);

// The sl3 module named by the selector.
Representation build_module(PrimeField f, const ModuleSelector& sel);

// Full pipeline: build module (viewed over gl3 with z -> 0 when asked),
// build the complex, restrict to weights divisible by p, compute, decompose.
CohomologyReport compute_cohomology_report(PrimeField f, const std::string& algebra,
                                           const ModuleSelector& sel, unsigned threads = 1,
                                           bool with_factors = true);

}  // namespace modcohom
