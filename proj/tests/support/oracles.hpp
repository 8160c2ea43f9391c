#pragma once

// Independent table-level oracles: these work directly on multiplication /
// differential tables and never touch the dual-side machinery they check.

#include "dihedra/ainfty.hpp"

namespace dihedra::testing {

struct DgaTable {
    InvolutiveSpace space;
    Matrix mult;  // dim x dim^2, rows: output basis
    Matrix diff;  // dim x dim

    std::vector<Scalar> product(std::size_t i, std::size_t j) const {
        return mult.col(i * space.dim() + j);
    }
};

// Brute-force associativity: (ab)c = a(bc) on all basis triples.
inline bool oracle_associative(const DgaTable& t) {
    std::size_t dim = t.space.dim();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c) {
                std::vector<Scalar> ab = t.product(a, b);
                std::vector<Scalar> bc = t.product(b, c);
                std::vector<Scalar> lhs(dim, Scalar::zero(t.space.field));
                std::vector<Scalar> rhs = lhs;
                for (std::size_t k = 0; k < dim; ++k) {
                    if (!ab[k].is_zero()) lhs = lhs + ab[k] * t.product(k, c);
                    if (!bc[k].is_zero()) rhs = rhs + bc[k] * t.product(a, k);
                }
                if (!(is_zero(lhs - rhs))) return false;
            }
    return true;
}

// d^2 = 0 and the Leibniz rule d(ab) = d(a)b + (-1)^{|a|} a d(b).
inline bool oracle_dga_differential(const DgaTable& t) {
    std::size_t dim = t.space.dim();
    if (!(t.diff * t.diff).is_zero()) return false;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            std::vector<Scalar> lhs = t.diff.apply(t.product(a, b));
            std::vector<Scalar> rhs(dim, Scalar::zero(t.space.field));
            std::vector<Scalar> da = t.diff.col(a), db = t.diff.col(b);
            for (std::size_t k = 0; k < dim; ++k) {
                if (!da[k].is_zero()) rhs = rhs + da[k] * t.product(k, b);
                if (!db[k].is_zero())
                    rhs = rhs + (Scalar::in_field(t.space.degree(a) % 2 != 0 ? -1 : 1,
                                                  t.space.field) *
                                 db[k]) *
                                    t.product(a, k);
            }
            if (!is_zero(lhs - rhs)) return false;
        }
    return true;
}

// Involutive algebra axioms: (ab)* = (-1)^{|a||b|} b* a*, d(a*) = d(a)*.
inline bool oracle_dga_involutive(const DgaTable& t) {
    std::size_t dim = t.space.dim();
    const Matrix& p = t.space.involution;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            std::vector<Scalar> lhs = p.apply(t.product(a, b));
            std::vector<Scalar> rhs(dim, Scalar::zero(t.space.field));
            std::vector<Scalar> pa = p.col(a), pb = p.col(b);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (!pb[i].is_zero() && !pa[j].is_zero())
                        rhs = rhs + (pb[i] * pa[j]) * t.product(i, j);
            int sgn = (t.space.degree(a) * t.space.degree(b)) % 2 != 0 ? -1 : 1;
            rhs = Scalar::in_field(sgn, t.space.field) * rhs;
            if (!is_zero(lhs - rhs)) return false;
        }
    if (!(p * t.diff == t.diff * p)) return false;
    return true;
}

// Frobenius compatibility <ab, c> = <a, bc> plus invariance <a*,b*> = <a,b>.
inline bool oracle_dga_cyclic(const DgaTable& t) {
    if (!t.space.form) return false;
    std::size_t dim = t.space.dim();
    const Matrix& g = t.space.form->gram;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c) {
                Scalar lhs = Scalar::zero(t.space.field), rhs = lhs;
                std::vector<Scalar> ab = t.product(a, b), bc = t.product(b, c);
                for (std::size_t k = 0; k < dim; ++k) {
                    if (!ab[k].is_zero()) lhs += ab[k] * g.at(k, c);
                    if (!bc[k].is_zero()) rhs += g.at(a, k) * bc[k];
                }
                if (lhs != rhs) return false;
            }
    return true;
}

inline DgaTable table_of(const AInftyStructure& s) {
    DgaTable t;
    t.space = s.base;
    std::size_t dim = s.base.dim();
    t.mult = s.trunc >= 2 ? hat_transport(s.base.space.degrees, s.m.comp[2], 2, 1)
                          : Matrix(dim, dim * dim, s.base.field);
    t.diff = s.trunc >= 1 ? hat_transport(s.base.space.degrees, s.m.comp[1], 1, 1)
                          : Matrix(dim, dim, s.base.field);
    return t;
}

}  // namespace dihedra::testing
