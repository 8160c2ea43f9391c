#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dihedra {

// Truncated polynomial coefficient ring k[eps_1,...,eps_r]/(eps_i^{q_i}),
// augmented by the constant term. Monomials are indexed mixed-radix with
// index 0 the constant; the augmentation ideal is everything else.
struct NilpotentRing {
    std::vector<std::string> vars;
    std::vector<unsigned> orders;  // q_i >= 1

    std::size_t monomial_count() const;
    std::vector<unsigned> exponents(std::size_t idx) const;
    std::size_t index(const std::vector<unsigned>& e) const;

    // Product of two monomials, or -1 when it falls in the vanishing ideal.
    long mono_mul(std::size_t a, std::size_t b) const;

    // Smallest q with (R_+)^q = 0.
    std::size_t nilpotency_order() const;

    std::string monomial_str(std::size_t idx) const;
    std::string str() const;

    bool operator==(const NilpotentRing&) const = default;

    // "eps^3" or "eps1^2,eps2^3"; bare "eps" means order 2.
    static NilpotentRing parse(const std::string& text);
    static NilpotentRing single(unsigned order, const std::string& name = "eps");
};

}  // namespace dihedra
