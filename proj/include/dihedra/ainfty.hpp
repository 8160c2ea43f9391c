#pragma once

#include <map>

#include "dihedra/derivation.hpp"

namespace dihedra {

struct CheckIssue {
    int weight = 0;
    std::string witness;
};

struct CheckReport {
    std::string check;
    bool ok = true;
    std::vector<CheckIssue> issues;
};

// An A-infinity structure on V: a degree-one derivation m of the truncated
// tensor algebra on the desuspended dual, with vanishing weight-0 component,
// squaring to zero up to the truncation. Flags mark the involutive/cyclic
// refinements; checks are separate operations so invalid candidates can be
// diagnosed.
struct AInftyStructure {
    InvolutiveSpace base;  // V
    std::size_t trunc = 5;
    LetterSpace letters;   // generators of the tensor algebra, degree 1 - |v|
    Derivation m;          // degree 1, comp[0] = 0
    bool involutive = false;
    bool cyclic = false;
};

LetterSpace letter_space(const InvolutiveSpace& v);

AInftyStructure make_structure(InvolutiveSpace v, std::size_t trunc,
                               const std::map<std::size_t, Matrix>& components,
                               bool involutive = false, bool cyclic = false);

// Transport between a weight-n component (rows: weight-n words over the
// source letters, cols: generators of dst) and the corresponding n-ary map
// dst_V <- src_V^{⊗n}. The Koszul sign depends only on the source degrees
// and the component degree h; the transport is involutive, so it serves both
// directions.
Matrix hat_transport(const std::vector<int>& src_v_degrees, const Matrix& comp, std::size_t n,
                     int h);
Matrix hat_untransport(const std::vector<int>& src_v_degrees, const Matrix& hat, std::size_t n,
                       int h);

// m^2 = 0 on generators, per weight up to the truncation.
CheckReport check_square_zero(const AInftyStructure& s);

// m^2 = 0 through the given weight, treating the stored components as the
// whole of m. The weight-0 cochains of the Hochschild complex reach one
// weight past the truncation, so complexes with such blocks need this at
// trunc + 1.
bool square_zero_through(const AInftyStructure& s, std::size_t weight);

// m commutes with the tensor-algebra involution (m* = m), per weight.
CheckReport check_involutive(const AInftyStructure& s);

// The same condition unwrapped on the n-ary maps:
// hat_m_n(x_1..x_n)* = (-1)^eps (-1)^{n(n+1)/2-1} hat_m_n(x_n*,..,x_1*).
CheckReport check_hat_involutive(const AInftyStructure& s);

// Cyclic-derivation identity on the n-ary maps against the base form:
// <hat_m_n(x_1..x_n), x_{n+1}> = (-1)^eps (-1)^n <hat_m_n(x_{n+1},x_1,..,x_{n-1}), x_n>.
CheckReport check_cyclic(const AInftyStructure& s);

CheckReport check_structure(const AInftyStructure& s);  // all applicable checks

// Linear conditions cutting the cyclic-derivation subspace out of the
// weight-n degree-h component block whose columns are the (word, generator)
// pairs listed in `columns`.
Matrix cyclic_condition_rows(const AInftyStructure& s, std::size_t n, int h,
                             const std::vector<std::pair<std::size_t, std::size_t>>& columns);

// Differential graded algebra import: multiplication tensor (rows: basis,
// cols: pairs (i,j) indexed i*dim+j) and differential matrix become the
// weight-2 and weight-1 components; all higher components vanish.
AInftyStructure from_dga(InvolutiveSpace v, std::size_t trunc, const Matrix& multiplication,
                         const Matrix& differential, bool involutive = false, bool cyclic = false);

// Morphism from `source` to `target`: an algebra map of the tensor algebras
// (contravariant), components phi_n from a target generator into weight-n
// source words.
struct AInftyMorphism {
    const AInftyStructure* source = nullptr;
    const AInftyStructure* target = nullptr;
    std::vector<Matrix> comp;  // index n = 1..trunc; comp[0] unused
};

AInftyMorphism identity_morphism(const AInftyStructure& s);

// Multiplicative extension of phi on a weight-w word of target letters.
MixedElement morphism_apply_word(const AInftyMorphism& phi, std::size_t weight, std::size_t idx);

struct MorphismReport {
    CheckReport compatibility;  // m . phi = phi . m'
    CheckReport involutive;     // phi commutes with the involutions
    CheckReport cyclic;         // phi preserves the bilinear form
};

MorphismReport check_morphism(const AInftyMorphism& phi);

}  // namespace dihedra
