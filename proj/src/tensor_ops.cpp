#include "dihedra/tensor_ops.hpp"

#include <deque>
#include <stdexcept>

namespace dihedra {

std::optional<LetterSpace::SignedPerm> LetterSpace::involution_perm() const {
    SignedPerm sp;
    sp.image.assign(dim(), 0);
    sp.sign.assign(dim(), 1);
    for (std::size_t j = 0; j < dim(); ++j) {
        std::size_t nnz = 0, row = 0;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!involution.at(i, j).is_zero()) {
                ++nnz;
                row = i;
            }
        if (nnz != 1) return std::nullopt;
        Scalar c = involution.at(row, j);
        if (c.is_one())
            sp.sign[j] = 1;
        else if (c == Scalar(-1))
            sp.sign[j] = -1;
        else
            return std::nullopt;
        sp.image[j] = row;
    }
    return sp;
}

std::pair<int, std::size_t> rotate_word(const LetterSpace& w, std::size_t weight,
                                        std::size_t idx) {
    if (weight <= 1) return {1, idx};
    WordSpace ws = w.words(weight);
    Word u = ws.word(idx);
    std::vector<int> degs(weight);
    for (std::size_t i = 0; i < weight; ++i) degs[i] = w.degrees[u[i]];
    int sgn = rotation_sign(degs);
    Word v(weight);
    v[0] = u[weight - 1];
    for (std::size_t i = 1; i < weight; ++i) v[i] = u[i - 1];
    return {sgn, ws.index(v)};
}

std::vector<Scalar> involute_word(const LetterSpace& w, std::size_t weight, std::size_t idx) {
    WordSpace ws = w.words(weight);
    std::vector<Scalar> out(ws.size(), Scalar::zero(w.field));
    if (weight == 0) {
        out[0] = Scalar::one(w.field);
        return out;
    }
    Word u = ws.word(idx);
    std::vector<int> degs(weight);
    for (std::size_t i = 0; i < weight; ++i) degs[i] = w.degrees[u[i]];
    Scalar sgn = Scalar::in_field(reversal_sign(degs), w.field);

    // Kronecker product of involution columns for the reversed word.
    std::vector<Scalar> acc{sgn};
    for (std::size_t k = weight; k-- > 0;) {
        std::vector<Scalar> col = w.involution.col(u[k]);
        std::vector<Scalar> next(acc.size() * w.dim(), Scalar::zero(w.field));
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (acc[a].is_zero()) continue;
            for (std::size_t c = 0; c < w.dim(); ++c)
                if (!col[c].is_zero()) next[a * w.dim() + c] = acc[a] * col[c];
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<Scalar> involute_vector(const LetterSpace& w, std::size_t weight,
                                    const std::vector<Scalar>& v) {
    WordSpace ws = w.words(weight);
    std::vector<Scalar> out(ws.size(), Scalar::zero(w.field));
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        std::vector<Scalar> img = involute_word(w, weight, idx);
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!img[k].is_zero()) out[k] += v[idx] * img[k];
    }
    return out;
}

Matrix rotation_matrix(const LetterSpace& w, std::size_t weight) {
    WordSpace ws = w.words(weight);
    Matrix m(ws.size(), ws.size(), w.field);
    for (std::size_t idx = 0; idx < ws.size(); ++idx) {
        auto [sgn, img] = rotate_word(w, weight, idx);
        m.at(img, idx) = Scalar::in_field(sgn, w.field);
    }
    return m;
}

Matrix tensor_involution_matrix(const LetterSpace& w, std::size_t weight) {
    WordSpace ws = w.words(weight);
    Matrix m(ws.size(), ws.size(), w.field);
    for (std::size_t idx = 0; idx < ws.size(); ++idx) m.set_col(idx, involute_word(w, weight, idx));
    return m;
}

namespace {

// Orbit-based coinvariants for monomial group actions: a class survives iff
// no group element returns a word to itself with a coefficient other than 1.
CoinvariantSpace coinvariants_orbit(const LetterSpace& w, std::size_t weight, CoinvGroup group,
                                    const LetterSpace::SignedPerm& invperm) {
    WordSpace ws = w.words(weight);
    std::size_t n = ws.size();
    const FieldSpec& f = w.field;

    // Generator application: g(e_u) = c * e_v.
    auto apply_r = [&](std::size_t u) { return rotate_word(w, weight, u); };
    auto apply_s = [&](std::size_t u) -> std::pair<int, std::size_t> {
        Word word = ws.word(u);
        std::vector<int> degs(weight);
        Word img(weight);
        int sgn = 1;
        for (std::size_t i = 0; i < weight; ++i) degs[i] = w.degrees[word[i]];
        sgn = reversal_sign(degs);
        for (std::size_t i = 0; i < weight; ++i) {
            std::size_t src = word[weight - 1 - i];
            img[i] = invperm.image[src];
            sgn *= invperm.sign[src];
        }
        if (group == CoinvGroup::DihedralMinus) sgn = -sgn;
        return {sgn, weight == 0 ? 0 : ws.index(img)};
    };

    std::vector<int> state(n, -1);  // -1 unseen, otherwise orbit id
    std::vector<Scalar> coeff(n, Scalar::zero(f));  // e_u = coeff[u] * e_rep
    std::vector<std::size_t> reps;
    std::vector<bool> orbit_dead;

    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] >= 0) continue;
        int orbit = static_cast<int>(reps.size());
        reps.push_back(start);
        orbit_dead.push_back(false);
        state[start] = orbit;
        coeff[start] = Scalar::one(f);
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            std::vector<std::pair<int, std::size_t>> edges;
            edges.push_back(apply_r(u));
            if (group != CoinvGroup::Cyclic) edges.push_back(apply_s(u));
            for (auto [c, v] : edges) {
                // e_u ~ c e_v  =>  e_v = coeff[u]/c * e_rep
                Scalar cv = coeff[u] / Scalar::in_field(c, f);
                if (state[v] < 0) {
                    state[v] = orbit;
                    coeff[v] = cv;
                    queue.push_back(v);
                } else if (coeff[v] != cv) {
                    orbit_dead[orbit] = true;
                }
            }
        }
    }

    CoinvariantSpace out;
    out.weight = weight;
    out.group = group;
    out.ambient_dim = n;
    std::vector<int> orbit_class(reps.size(), -1);
    for (std::size_t o = 0; o < reps.size(); ++o)
        if (!orbit_dead[o]) {
            orbit_class[o] = static_cast<int>(out.rep_words.size());
            out.rep_words.push_back(reps[o]);
        }
    out.dim = out.rep_words.size();
    out.projection = Matrix(out.dim, n, f);
    out.section = Matrix(n, out.dim, f);
    for (std::size_t u = 0; u < n; ++u) {
        int cls = orbit_class[state[u]];
        if (cls < 0) continue;
        out.projection.at(cls, u) = coeff[u];
    }
    for (std::size_t c = 0; c < out.dim; ++c) out.section.at(out.rep_words[c], c) = Scalar::one(f);
    return out;
}

CoinvariantSpace coinvariants_generic(const LetterSpace& w, std::size_t weight, CoinvGroup group) {
    WordSpace ws = w.words(weight);
    std::size_t n = ws.size();
    const FieldSpec& f = w.field;

    // Relation rows e_u - g(e_u), echelonized.
    std::vector<std::vector<Scalar>> rel;
    for (std::size_t u = 0; u < n; ++u) {
        auto [sgn, v] = rotate_word(w, weight, u);
        std::vector<Scalar> row(n, Scalar::zero(f));
        row[u] += Scalar::one(f);
        row[v] -= Scalar::in_field(sgn, f);
        rel.push_back(std::move(row));
        if (group != CoinvGroup::Cyclic) {
            std::vector<Scalar> img = involute_word(w, weight, u);
            std::vector<Scalar> srow(n, Scalar::zero(f));
            srow[u] += Scalar::one(f);
            Scalar flip = Scalar::in_field(group == CoinvGroup::DihedralMinus ? -1 : 1, f);
            for (std::size_t k = 0; k < n; ++k) srow[k] -= flip * img[k];
            rel.push_back(std::move(srow));
        }
    }
    Matrix relm(rel.size(), n, f);
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) relm.at(i, j) = rel[i][j];
    Rref rr = rref(relm);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    CoinvariantSpace out;
    out.weight = weight;
    out.group = group;
    out.ambient_dim = n;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) out.rep_words.push_back(c);
    out.dim = out.rep_words.size();
    out.projection = Matrix(out.dim, n, f);
    out.section = Matrix(n, out.dim, f);
    // Reduce each basis vector modulo the relation rows; what remains is
    // supported on non-pivot words.
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Scalar> v(n, Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (std::size_t k = 0; k < rr.rank; ++k) {
            Scalar x = v[rr.pivots[k]];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] -= x * rr.r.at(k, j);
        }
        for (std::size_t q = 0; q < out.dim; ++q) out.projection.at(q, c) = v[out.rep_words[q]];
    }
    for (std::size_t q = 0; q < out.dim; ++q) out.section.at(out.rep_words[q], q) = Scalar::one(f);
    return out;
}

}  // namespace

CoinvariantSpace coinvariants(const LetterSpace& w, std::size_t weight, CoinvGroup group) {
    if (group != CoinvGroup::Cyclic) {
        auto sp = w.involution_perm();
        if (sp) return coinvariants_orbit(w, weight, group, *sp);
        return coinvariants_generic(w, weight, group);
    }
    LetterSpace::SignedPerm dummy;  // cyclic action never uses the involution
    dummy.image.resize(w.dim());
    dummy.sign.assign(w.dim(), 1);
    return coinvariants_orbit(w, weight, group, dummy);
}

}  // namespace dihedra
