#pragma once

#include "dihedra/ainfty.hpp"
#include "dihedra/cochain.hpp"

namespace dihedra {

// Basis of the degree-h part of Hom(W, W^{⊗n}) as (word, generator) pairs,
// ordered by generator then word.
std::vector<std::pair<std::size_t, std::size_t>> hom_block_basis(const AInftyStructure& s,
                                                                 std::size_t n, int h);

// Hochschild complex: degree-k cochains are the degree-(k-1) derivations,
// differential [m, -]. Weight blocks 0..N.
CochainComplex hochschild_complex(const AInftyStructure& s, int lo, int hi);

// Eigen-subcomplexes of the derivation involution (requires an involutive
// structure so that [m, xi]* = [m, xi*]).
std::pair<CochainComplex, CochainComplex> hochschild_pm_complexes(const AInftyStructure& s,
                                                                  int lo, int hi);

// Cyclic complex on cyclic coinvariants of weights 1..N, with the induced
// differential (lift, apply m, project). Degree k holds classes whose
// representative words have degree k+1.
CochainComplex cyclic_complex(const AInftyStructure& s, int lo, int hi);

// Dihedral and skew-dihedral complexes (requires involutive).
std::pair<CochainComplex, CochainComplex> dihedral_complexes(const AInftyStructure& s, int lo,
                                                             int hi);

// Cyclic-derivation subcomplexes: whole, +, - (the sign parts require an
// involutive structure with an invariant form). Degree labels follow the
// Hochschild convention (degree k = derivations of degree k-1).
struct CyclicDerivationComplexes {
    CochainComplex whole;
    std::optional<CochainComplex> plus;
    std::optional<CochainComplex> minus;
};

CyclicDerivationComplexes cyclic_derivation_complexes(const AInftyStructure& s, int lo, int hi);

// The weight-n isomorphism Hom(W, W^{⊗n}) ≅ (shifted) W^{⊗n+1} induced by a
// non-degenerate form, restricted to cyclic derivations and composed with
// the coinvariant projection. Verifies bijectivity per weight, the chain
// identity f([m,xi]) = m(f(xi)), and (involutive case) that f intertwines
// the two involutions.
struct IsoWeightRow {
    std::size_t der_weight = 0;
    std::size_t der_dim = 0;
    std::size_t cc_dim = 0;
    bool bijective = false;
    bool plus_minus_match = true;  // trivially true in the non-involutive case
};

struct IsoReport {
    bool ok = true;
    bool chain_ok = true;
    bool pm_ok = true;
    std::vector<IsoWeightRow> rows;
    std::vector<std::string> witnesses;
};

IsoReport cc_der_isomorphism(const AInftyStructure& s);

// Element of the cyclic complex: a weight and a representative vector over
// the weight's words.
struct CCElement {
    std::size_t weight = 0;
    std::vector<Scalar> rep;
};

// Raw form-induced map on the weight-n component block, before projecting
// to coinvariants. Columns are ordered (generator j, word u) -> j*words+u;
// rows are weight-(n+1) words.
Matrix cc_der_map(const AInftyStructure& s, std::size_t n);

// Basis of the cyclic-derivation subspace of the full weight-n component
// block (all degrees), in the same ambient column order.
SubspaceBasis cyclic_derivation_block(const AInftyStructure& s, std::size_t n);

// Lie bracket on the (shifted) cyclic complex by the pairing double sum:
// rotate the first word to end at letter i, the second to start at letter j,
// contract the adjacent pair with the inverse form. Output of weight
// n+m-2 (zero element when that exceeds the truncation).
CCElement cc_bracket(const AInftyStructure& s, const CCElement& x, const CCElement& y);

// Canonical class representative (project then lift).
CCElement cc_canonical(const AInftyStructure& s, const CCElement& x);

}  // namespace dihedra
