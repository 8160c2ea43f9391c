#pragma once

#include <map>

#include "dihedra/tensor_ops.hpp"

namespace dihedra {

// Homogeneous derivation of the weight-truncated tensor algebra on the
// letter space, stored by its restriction to generators: comp[n] maps a
// generator into the weight-n component (comp[n] is dim^n x dim). The
// weight-0 component is the part landing in scalars; it vanishes for
// derivations of the augmentation subalgebra.
struct Derivation {
    int degree = 0;
    std::size_t max_weight = 0;
    std::vector<Matrix> comp;  // size max_weight + 1

    static Derivation zero(const LetterSpace& w, int degree, std::size_t max_weight);

    bool is_zero() const;
    bool same_shape(const Derivation& o) const;
    // Every nonzero entry must connect a generator to a word of degree
    // (generator degree + `degree`).
    void validate_homogeneous(const LetterSpace& w) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation scaled(const Scalar& c) const;

    // Lowest weight with a nonzero component, or max_weight+1 if zero.
    std::size_t min_weight() const;
};

// Mixed-weight element of the truncated tensor algebra: per-weight dense
// coordinate vectors (absent weights are zero).
using MixedElement = std::map<std::size_t, std::vector<Scalar>>;

void add_into(MixedElement& acc, std::size_t weight, const std::vector<Scalar>& v,
              const Scalar& factor);

// Leibniz extension of xi applied to the basis word `idx` of weight w;
// output truncated to weights <= max_weight.
MixedElement apply_to_word(const LetterSpace& w, const Derivation& xi, std::size_t weight,
                           std::size_t idx);

MixedElement apply_to_vector(const LetterSpace& w, const Derivation& xi, std::size_t weight,
                             const std::vector<Scalar>& v);

MixedElement apply_to_mixed(const LetterSpace& w, const Derivation& xi, const MixedElement& v);

// xi applied after then before eta on generators: [xi, eta] with the graded
// commutator sign, truncated. Exact in all weights when either argument has
// no weight-0 component.
Derivation commutator(const LetterSpace& w, const Derivation& xi, const Derivation& eta);

// xi*(x) = xi(x*)*: componentwise S_n . xi_n . P.
Derivation derivation_involution(const LetterSpace& w, const Derivation& xi);

// (xi^+, xi^-) with xi^± = (xi ± xi*)/2.
std::pair<Derivation, Derivation> plus_minus_split(const LetterSpace& w, const Derivation& xi);

}  // namespace dihedra
