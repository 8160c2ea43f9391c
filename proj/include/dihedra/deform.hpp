#pragma once

#include "dihedra/cohom.hpp"
#include "dihedra/nilpotent_ring.hpp"

namespace dihedra {

enum class Flavor { Plain, Involutive, Cyclic, CyclicInvolutive };

Flavor parse_flavor(const std::string& s);  // plain|inv|cyc|cycinv
std::string flavor_str(Flavor f);

// Element of (derivation algebra) tensor R: sparse monomial -> derivation.
// Deformation data lives in the augmentation ideal (no constant term).
struct RDerivation {
    NilpotentRing ring;
    int degree = 0;
    std::map<std::size_t, Derivation> terms;

    bool is_zero() const;
    bool augmentation_supported() const;  // no constant term
    RDerivation operator+(const RDerivation& o) const;
    RDerivation operator-(const RDerivation& o) const;
    RDerivation scaled(const Scalar& c) const;
};

RDerivation make_rderivation(const NilpotentRing& ring, int degree,
                             std::map<std::size_t, Derivation> terms);

RDerivation r_bracket(const LetterSpace& w, const RDerivation& a, const RDerivation& b);
RDerivation r_bracket_base(const LetterSpace& w, const Derivation& m, const RDerivation& a);

// Whether a single derivation lies in the flavored subalgebra
// (Der_+ / Der^cycl / their intersection) of Der of the augmentation
// subalgebra; weight-0 components are excluded for every flavor.
bool in_flavor(const AInftyStructure& s, const Derivation& xi, Flavor flavor);
bool in_flavor(const AInftyStructure& s, const RDerivation& xi, Flavor flavor);

struct McVerdict {
    bool ok = true;
    std::vector<std::string> witnesses;
};

// Maurer-Cartan test: [m, eta] + (1/2)[eta, eta] = 0 up to the truncation
// and nilpotency order. Throws when eta leaves the flavored subalgebra.
McVerdict mc_check(const AInftyStructure& s, const RDerivation& eta, Flavor flavor);

// R-linear operators on the flattened truncated tensor algebra.
struct TruncOperator {
    NilpotentRing ring;
    std::size_t dim = 0;
    std::map<std::size_t, Matrix> terms;

    bool reduction_is_identity() const;
};

std::size_t algebra_dim(const AInftyStructure& s);
std::vector<std::size_t> weight_offsets(const AInftyStructure& s);

// Leibniz action of a derivation on the flattened algebra.
Matrix derivation_operator(const AInftyStructure& s, const Derivation& xi);
TruncOperator derivation_operator(const AInftyStructure& s, const RDerivation& xi);

TruncOperator compose(const AInftyStructure& s, const TruncOperator& a, const TruncOperator& b);

// exp of a degree-0 derivation with coefficients in R_+ (finite series);
// the result is an R-linear algebra automorphism with identity reduction.
TruncOperator exp_operator(const AInftyStructure& s, const RDerivation& y);

// log of an automorphism whose reduction is the identity; the result is
// certified to be a derivation (its Leibniz extension reproduces the
// operator) before being returned.
RDerivation log_operator(const AInftyStructure& s, const TruncOperator& phi, int degree = 0);

// Baker-Campbell-Hausdorff product via log(e^x e^y) on the truncated
// algebra, so e^x e^y = e^{x • y} holds by construction.
RDerivation bch(const AInftyStructure& s, const RDerivation& x, const RDerivation& y);

// Gauge action e^y . xi = xi + sum_{n>=1} (1/n!) ad_y^{n-1}(ad_y xi - dy),
// d = [m, -]. Preserves Maurer-Cartan elements and the flavor.
RDerivation gauge_action(const AInftyStructure& s, const RDerivation& y, const RDerivation& xi,
                         Flavor flavor);

// R-linear structure m + eta and its reduction at the augmentation.
struct RStructure {
    const AInftyStructure* base = nullptr;
    RDerivation eta;
};

AInftyStructure reduction(const RStructure& s);

// Infinitesimal moduli over k[eps]/(eps^2): flavored degree-1 cocycles
// modulo flavored exact terms, inside the weight >= 1 part.
std::size_t infinitesimal_moduli(const AInftyStructure& s, Flavor flavor);

// The same dimension along the cohomology route (H^2 of CH_{>=1} or
// CH+_{>=1}; H^{2-d} of CC_{>=1} or CD+_{>=1} for the cyclic flavors).
std::size_t moduli_via_cohomology(const AInftyStructure& s, Flavor flavor);

}  // namespace dihedra
