#include "dihedra/derivation.hpp"

#include <stdexcept>

namespace dihedra {

Derivation Derivation::zero(const LetterSpace& w, int degree, std::size_t max_weight) {
    Derivation d;
    d.degree = degree;
    d.max_weight = max_weight;
    for (std::size_t n = 0; n <= max_weight; ++n)
        d.comp.emplace_back(w.words(n).size(), w.dim(), w.field);
    return d;
}

bool Derivation::is_zero() const {
    for (const Matrix& m : comp)
        if (!m.is_zero()) return false;
    return true;
}

bool Derivation::same_shape(const Derivation& o) const {
    return max_weight == o.max_weight && comp.size() == o.comp.size();
}

void Derivation::validate_homogeneous(const LetterSpace& w) const {
    for (std::size_t n = 0; n < comp.size(); ++n) {
        WordSpace ws = w.words(n);
        for (std::size_t u = 0; u < comp[n].rows(); ++u)
            for (std::size_t j = 0; j < comp[n].cols(); ++j) {
                if (comp[n].at(u, j).is_zero()) continue;
                int wd = word_degree(ws.word(u), w.degrees);
                if (wd != w.degrees[j] + degree)
                    throw std::invalid_argument(
                        "derivation entry at weight " + std::to_string(n) +
                        " violates homogeneity: generator " + w.names[j] + " -> word of degree " +
                        std::to_string(wd));
            }
    }
}

Derivation Derivation::operator+(const Derivation& o) const {
    if (!same_shape(o) || degree != o.degree)
        throw std::invalid_argument("derivation shape/degree mismatch in +");
    Derivation r = *this;
    for (std::size_t n = 0; n < comp.size(); ++n) r.comp[n] = comp[n] + o.comp[n];
    return r;
}

Derivation Derivation::operator-(const Derivation& o) const {
    if (!same_shape(o) || degree != o.degree)
        throw std::invalid_argument("derivation shape/degree mismatch in -");
    Derivation r = *this;
    for (std::size_t n = 0; n < comp.size(); ++n) r.comp[n] = comp[n] - o.comp[n];
    return r;
}

Derivation Derivation::scaled(const Scalar& c) const {
    Derivation r = *this;
    for (Matrix& m : r.comp) m = m * c;
    return r;
}

std::size_t Derivation::min_weight() const {
    for (std::size_t n = 0; n < comp.size(); ++n)
        if (!comp[n].is_zero()) return n;
    return max_weight + 1;
}

void add_into(MixedElement& acc, std::size_t weight, const std::vector<Scalar>& v,
              const Scalar& factor) {
    if (factor.is_zero() || is_zero(v)) return;
    auto it = acc.find(weight);
    if (it == acc.end()) {
        acc[weight] = factor * v;
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += factor * v[i];
}

MixedElement apply_to_word(const LetterSpace& w, const Derivation& xi, std::size_t weight,
                           std::size_t idx) {
    MixedElement out;
    if (weight == 0) return out;  // derivations kill scalars
    WordSpace ws = w.words(weight);
    Word u = ws.word(idx);

    int prefix_deg = 0;
    for (std::size_t pos = 0; pos < weight; ++pos) {
        int koszul = (xi.degree * prefix_deg) % 2 != 0 ? -1 : 1;
        Scalar sgn = Scalar::in_field(koszul, w.field);
        for (std::size_t n = 0; n < xi.comp.size(); ++n) {
            std::size_t target = weight - 1 + n;
            if (target > xi.max_weight) continue;
            const Matrix& comp = xi.comp[n];
            if (comp.is_zero()) continue;
            WordSpace tws = w.words(target);
            WordSpace nws = w.words(n);
            // Splice each output word of xi_n(u_pos) into position pos.
            for (std::size_t z = 0; z < comp.rows(); ++z) {
                const Scalar& c = comp.at(z, u[pos]);
                if (c.is_zero()) continue;
                Word mid = nws.word(z);
                Word spliced;
                spliced.reserve(target);
                spliced.insert(spliced.end(), u.begin(), u.begin() + pos);
                spliced.insert(spliced.end(), mid.begin(), mid.end());
                spliced.insert(spliced.end(), u.begin() + pos + 1, u.end());
                auto it = out.find(target);
                if (it == out.end())
                    it = out.emplace(target, std::vector<Scalar>(tws.size(), Scalar::zero(w.field)))
                             .first;
                it->second[tws.index(spliced)] += sgn * c;
            }
        }
        prefix_deg += w.degrees[u[pos]];
    }
    return out;
}

MixedElement apply_to_vector(const LetterSpace& w, const Derivation& xi, std::size_t weight,
                             const std::vector<Scalar>& v) {
    MixedElement out;
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        MixedElement part = apply_to_word(w, xi, weight, idx);
        for (auto& [tw, vec] : part) add_into(out, tw, vec, v[idx]);
    }
    return out;
}

MixedElement apply_to_mixed(const LetterSpace& w, const Derivation& xi, const MixedElement& v) {
    MixedElement out;
    for (const auto& [weight, vec] : v) {
        MixedElement part = apply_to_vector(w, xi, weight, vec);
        for (auto& [tw, pv] : part) add_into(out, tw, pv, Scalar::one(w.field));
    }
    return out;
}

Derivation commutator(const LetterSpace& w, const Derivation& xi, const Derivation& eta) {
    if (xi.max_weight != eta.max_weight)
        throw std::invalid_argument("commutator arguments have different truncations");
    Derivation out = Derivation::zero(w, xi.degree + eta.degree, xi.max_weight);
    int sign = (xi.degree * eta.degree) % 2 != 0 ? -1 : 1;
    Scalar koszul = Scalar::in_field(sign, w.field);

    for (std::size_t j = 0; j < w.dim(); ++j) {
        // xi(eta(w_j)) - (-1)^{|xi||eta|} eta(xi(w_j)), reread per weight.
        MixedElement ej, xj;
        for (std::size_t n = 0; n < eta.comp.size(); ++n)
            add_into(ej, n, eta.comp[n].col(j), Scalar::one(w.field));
        for (std::size_t n = 0; n < xi.comp.size(); ++n)
            add_into(xj, n, xi.comp[n].col(j), Scalar::one(w.field));
        MixedElement first = apply_to_mixed(w, xi, ej);
        MixedElement second = apply_to_mixed(w, eta, xj);
        for (auto& [tw, vec] : first)
            for (std::size_t u = 0; u < vec.size(); ++u) out.comp[tw].at(u, j) += vec[u];
        for (auto& [tw, vec] : second)
            for (std::size_t u = 0; u < vec.size(); ++u) out.comp[tw].at(u, j) -= koszul * vec[u];
    }
    return out;
}

Derivation derivation_involution(const LetterSpace& w, const Derivation& xi) {
    Derivation out = Derivation::zero(w, xi.degree, xi.max_weight);
    for (std::size_t n = 0; n < xi.comp.size(); ++n) {
        if (xi.comp[n].is_zero()) continue;
        // (xi*)_n = S_n . xi_n . P, column by column.
        Matrix pre = xi.comp[n] * w.involution;
        for (std::size_t j = 0; j < w.dim(); ++j)
            out.comp[n].set_col(j, involute_vector(w, n, pre.col(j)));
    }
    return out;
}

std::pair<Derivation, Derivation> plus_minus_split(const LetterSpace& w, const Derivation& xi) {
    Derivation star = derivation_involution(w, xi);
    Scalar half = Scalar::one(w.field) / Scalar::in_field(2, w.field);
    Derivation plus = (xi + star).scaled(half);
    Derivation minus = (xi - star).scaled(half);
    return {plus, minus};
}

}  // namespace dihedra
