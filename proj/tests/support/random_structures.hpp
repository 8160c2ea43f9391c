#pragma once

// Randomized structures for the property and acceptance suites. All
// generators are deterministic in the seed.

#include <random>

#include "builders.hpp"
#include "dihedra/cohom.hpp"

namespace dihedra::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Scalar rand_scalar(Rng& rng, long lo = -3, long hi = 3) {
    return Scalar(rand_int(rng, lo, hi));
}

// Random degree-preserving involution: conjugate a random diagonal of signs
// by a random invertible degree-block matrix.
inline Matrix random_involution(Rng& rng, const std::vector<int>& degrees) {
    std::size_t n = degrees.size();
    FieldSpec q;
    Matrix a(n, n, q);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (degrees[i] == degrees[j]) a.at(i, j) = rand_scalar(rng, -2, 2);
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, i).is_zero()) a.at(i, i) = Scalar(1);
    if (rank(a) < n) a = Matrix::identity(n, q);  // fall back on a unit
    Matrix d(n, n, q);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = Scalar(rand_int(rng, 0, 1) ? 1 : -1);
    return a * d * inverse(a);
}

inline InvolutiveSpace random_involutive_space(Rng& rng, std::size_t max_dim = 3) {
    std::size_t dim = static_cast<std::size_t>(rand_int(rng, 1, static_cast<long>(max_dim)));
    std::vector<std::pair<std::string, int>> basis;
    std::vector<int> degrees;
    for (std::size_t i = 0; i < dim; ++i) {
        int deg = static_cast<int>(rand_int(rng, -2, 2));
        degrees.push_back(deg);
        basis.emplace_back("v" + std::to_string(i), deg);
    }
    return make_involutive_space(basis, random_involution(rng, degrees));
}

// Random degree-preserving change of basis on the underlying space.
inline Matrix random_basis_change(Rng& rng, const InvolutiveSpace& v) {
    std::size_t n = v.dim();
    Matrix a(n, n, v.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v.degree(i) == v.degree(j)) a.at(i, j) = rand_scalar(rng, -2, 2);
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, i).is_zero()) a.at(i, i) = Scalar(1);
    if (rank(a) < n) return Matrix::identity(n, v.field);
    return a;
}

// Rewrite a structure in a new basis: gram -> A^T G A, involution ->
// A^{-1} P A, n-ary operations conjugated through the transport.
inline AInftyStructure basis_change(const AInftyStructure& s, const Matrix& a) {
    const InvolutiveSpace& v = s.base;
    Matrix ainv = inverse(a);
    InvolutiveSpace nv = v;
    nv.involution = ainv * v.involution * a;
    if (nv.form) nv.form->gram = a.transposed() * v.form->gram * a;
    nv.validate();

    std::map<std::size_t, Matrix> comps;
    for (std::size_t n = 1; n <= s.trunc; ++n) {
        if (s.m.comp[n].is_zero()) continue;
        Matrix hat = hat_transport(v.space.degrees, s.m.comp[n], n, 1);
        // hat'(x_1..x_n) = A^{-1} hat(A x_1, ..., A x_n)
        WordSpace ws{v.dim(), n};
        Matrix an(ws.size(), ws.size(), v.field);
        for (std::size_t t = 0; t < ws.size(); ++t) {
            // column t: tensor product of columns of a
            Word word = ws.word(t);
            std::vector<Scalar> acc{Scalar::one(v.field)};
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Scalar> col = a.col(word[k]);
                std::vector<Scalar> next(acc.size() * v.dim(), Scalar::zero(v.field));
                for (std::size_t x = 0; x < acc.size(); ++x) {
                    if (acc[x].is_zero()) continue;
                    for (std::size_t y = 0; y < v.dim(); ++y)
                        if (!col[y].is_zero()) next[x * v.dim() + y] = acc[x] * col[y];
                }
                acc = std::move(next);
            }
            an.set_col(t, acc);
        }
        Matrix nhat = ainv * hat * an;
        comps[n] = hat_untransport(nv.space.degrees, nhat, n, 1);
    }
    return make_structure(nv, s.trunc, comps, s.involutive, s.cyclic);
}

// Random degree-0 derivation supported in weights [wmin, wmax], restricted
// to the flavored subalgebra (symmetrized / projected onto the cyclic cut).
inline Derivation random_flavored_gauge(Rng& rng, const AInftyStructure& s, bool involutive,
                                        bool cyclic, std::size_t wmax = 4,
                                        std::size_t wmin = 2) {
    const FieldSpec& f = s.letters.field;
    Derivation z = Derivation::zero(s.letters, 0, s.trunc);
    for (std::size_t n = wmin; n <= std::min<std::size_t>(wmax, s.trunc); ++n) {
        auto elems = hom_block_basis(s, n, 0);
        if (elems.empty()) continue;
        if (cyclic) {
            Matrix cond = cyclic_condition_rows(s, n, 0, elems);
            auto ker = kernel_basis(cond);
            for (const auto& kv : ker)
                if (rand_int(rng, 0, 2) == 0) {
                    Scalar c = rand_scalar(rng, -2, 2);
                    for (std::size_t i = 0; i < elems.size(); ++i)
                        z.comp[n].at(elems[i].first, elems[i].second) += c * kv[i];
                }
        } else {
            for (const auto& [u, j] : elems)
                if (rand_int(rng, 0, 3) == 0) z.comp[n].at(u, j) += rand_scalar(rng, -2, 2);
        }
    }
    if (involutive) {
        Derivation star = derivation_involution(s.letters, z);
        Scalar half = Scalar::one(f) / Scalar::in_field(2, f);
        z = (z + star).scaled(half);
    }
    return z;
}

// exp(ad_z) applied to m; for z of filtration >= 1 the series terminates.
inline Derivation conjugate_structure(const LetterSpace& w, const Derivation& m,
                                      const Derivation& z) {
    const FieldSpec& f = w.field;
    Derivation acc = m;
    Derivation term = m;
    Scalar fact = Scalar::one(f);
    for (std::size_t k = 1; k <= m.max_weight + 1; ++k) {
        term = commutator(w, z, term);
        if (term.is_zero()) break;
        fact *= Scalar::in_field(static_cast<long>(k), f);
        acc = acc + term.scaled(Scalar::one(f) / fact);
    }
    return acc;
}

// A random valid structure of the requested flavor: a catalog base, an
// optional random change of basis, then a gauge-type conjugation by a random
// flavored derivation of weights >= 3. Conjugation is exact only modulo the
// truncation; starting at weight 3 keeps the stored square zero through
// trunc+1 for the catalog bases, which the derivation complexes need. The
// result is verified and the conjugation dropped if it fails.
inline AInftyStructure random_structure(Rng& rng, bool involutive, bool cyclic,
                                        std::size_t trunc = 4) {
    std::vector<AInftyStructure> catalog;
    catalog.push_back(zero_line(trunc));
    catalog.push_back(ground_field(trunc));
    catalog.push_back(dual_numbers(trunc));
    catalog.push_back(group_algebra_z2(trunc));
    catalog.push_back(exterior_line(trunc));
    if (!cyclic) catalog.push_back(two_step_dga(trunc, rand_int(rng, 0, 1) ? 1 : -1));
    if (trunc <= 3 || !cyclic) catalog.push_back(matrix_algebra2(std::min<std::size_t>(trunc, 3)));

    AInftyStructure s = catalog[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<long>(catalog.size()) - 1))];
    if (rand_int(rng, 0, 1)) s = basis_change(s, random_basis_change(rng, s.base));

    for (int attempt = 0; attempt < 4; ++attempt) {
        Derivation z = random_flavored_gauge(rng, s, involutive, cyclic, 4, 3);
        Derivation m = conjugate_structure(s.letters, s.m, z);
        std::map<std::size_t, Matrix> comps;
        for (std::size_t n = 1; n <= s.trunc; ++n)
            if (!m.comp[n].is_zero()) comps[n] = m.comp[n];
        AInftyStructure out = make_structure(s.base, s.trunc, comps, involutive, cyclic);
        if (square_zero_through(out, out.trunc + 1)) return out;
    }
    return s;
}

}  // namespace dihedra::testing
