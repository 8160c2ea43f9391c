#include "dihedra/ainfty.hpp"

#include <stdexcept>

namespace dihedra {

namespace {

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

Scalar sign_scalar(int parity_bit, const FieldSpec& f) {
    return Scalar::in_field(parity_bit ? -1 : 1, f);
}

// Kronecker product of involution columns for a reversed tuple, on the
// underlying space (used by the hat-side checks).
std::vector<Scalar> reversed_involution_tuple(const InvolutiveSpace& v, const Word& t) {
    std::vector<Scalar> acc{Scalar::one(v.field)};
    std::size_t dim = v.dim();
    for (std::size_t k = t.size(); k-- > 0;) {
        std::vector<Scalar> col = v.involution.col(t[k]);
        std::vector<Scalar> next(acc.size() * dim, Scalar::zero(v.field));
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (acc[a].is_zero()) continue;
            for (std::size_t c = 0; c < dim; ++c)
                if (!col[c].is_zero()) next[a * dim + c] = acc[a] * col[c];
        }
        acc = std::move(next);
    }
    return acc;
}

int reversal_parity_v(const InvolutiveSpace& v, const Word& t) {
    long eps = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            eps += static_cast<long>(v.degree(t[i])) * v.degree(t[j]);
    return parity(eps);
}

}  // namespace

LetterSpace letter_space(const InvolutiveSpace& v) {
    LetterSpace w;
    w.field = v.field;
    w.names = v.space.names;
    for (int d : v.space.degrees) w.degrees.push_back(1 - d);
    // Dualizing contributes -(P^T); the desuspension carries it unchanged.
    w.involution = -(v.involution.transposed());
    return w;
}

AInftyStructure make_structure(InvolutiveSpace v, std::size_t trunc,
                               const std::map<std::size_t, Matrix>& components, bool involutive,
                               bool cyclic) {
    v.validate();
    AInftyStructure s;
    s.base = std::move(v);
    s.trunc = trunc;
    s.letters = letter_space(s.base);
    s.m = Derivation::zero(s.letters, 1, trunc);
    for (const auto& [n, mat] : components) {
        if (n > trunc) continue;
        if (n == 0 && !mat.is_zero())
            throw std::invalid_argument("structure derivations have no weight-0 component");
        if (mat.rows() != s.letters.words(n).size() || mat.cols() != s.letters.dim())
            throw std::invalid_argument("component " + std::to_string(n) + " has wrong shape");
        s.m.comp[n] = mat;
    }
    s.m.validate_homogeneous(s.letters);
    s.involutive = involutive;
    s.cyclic = cyclic;
    if (cyclic && !s.base.form)
        throw std::invalid_argument("cyclic structures need a bilinear form");
    return s;
}

Matrix hat_transport(const std::vector<int>& src_v_degrees, const Matrix& comp, std::size_t n,
                     int h) {
    std::size_t dim = src_v_degrees.size();
    WordSpace ws{dim, n};
    if (comp.rows() != ws.size()) throw std::invalid_argument("hat transport shape mismatch");
    Matrix hat(comp.cols(), comp.rows(), comp.field());
    for (std::size_t t = 0; t < ws.size(); ++t) {
        Word word = ws.word(t);
        long term1 = 0, total = 0, term3 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            long a = src_v_degrees[word[i]];
            term1 += static_cast<long>(n - 1 - i) * a;
            total += a;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                term3 += (1 - static_cast<long>(src_v_degrees[word[i]])) *
                         (1 - static_cast<long>(src_v_degrees[word[j]]));
        long kappa = term1 + static_cast<long>(h) * (total - static_cast<long>(n)) + term3;
        Scalar sgn = sign_scalar(parity(kappa), comp.field());
        for (std::size_t j = 0; j < comp.cols(); ++j) {
            const Scalar& c = comp.at(t, j);
            if (!c.is_zero()) hat.at(j, t) = sgn * c;
        }
    }
    return hat;
}

Matrix hat_untransport(const std::vector<int>& src_v_degrees, const Matrix& hat, std::size_t n,
                       int h) {
    return hat_transport(src_v_degrees, hat.transposed(), n, h).transposed();
}

CheckReport check_square_zero(const AInftyStructure& s) {
    CheckReport rep{"square_zero", true, {}};
    const LetterSpace& w = s.letters;
    for (std::size_t j = 0; j < w.dim(); ++j) {
        MixedElement mj;
        for (std::size_t n = 0; n < s.m.comp.size(); ++n)
            add_into(mj, n, s.m.comp[n].col(j), Scalar::one(w.field));
        MixedElement sq = apply_to_mixed(w, s.m, mj);
        for (auto& [tw, vec] : sq) {
            for (std::size_t u = 0; u < vec.size(); ++u) {
                if (vec[u].is_zero()) continue;
                rep.ok = false;
                rep.issues.push_back(
                    {static_cast<int>(tw),
                     "m(m(" + w.names[j] + ")) has coefficient " + vec[u].str() + " on " +
                         word_label(w.words(tw).word(u), w.names)});
                break;  // one witness per weight and generator
            }
        }
    }
    return rep;
}

bool square_zero_through(const AInftyStructure& s, std::size_t weight) {
    const LetterSpace& w = s.letters;
    Derivation wide = Derivation::zero(w, 1, weight);
    for (std::size_t n = 0; n <= std::min(s.trunc, weight); ++n) wide.comp[n] = s.m.comp[n];
    for (std::size_t j = 0; j < w.dim(); ++j) {
        MixedElement mj;
        for (std::size_t n = 0; n < wide.comp.size(); ++n)
            add_into(mj, n, wide.comp[n].col(j), Scalar::one(w.field));
        MixedElement sq = apply_to_mixed(w, wide, mj);
        for (auto& [tw, vec] : sq)
            if (!is_zero(vec)) return false;
    }
    return true;
}

CheckReport check_involutive(const AInftyStructure& s) {
    CheckReport rep{"involutive", true, {}};
    Derivation star = derivation_involution(s.letters, s.m);
    for (std::size_t n = 0; n < s.m.comp.size(); ++n) {
        Matrix diff = star.comp[n] - s.m.comp[n];
        if (diff.is_zero()) continue;
        rep.ok = false;
        for (std::size_t j = 0; j < diff.cols(); ++j)
            for (std::size_t u = 0; u < diff.rows(); ++u)
                if (!diff.at(u, j).is_zero()) {
                    rep.issues.push_back({static_cast<int>(n),
                                          "(m* - m)(" + s.letters.names[j] + ") is nonzero at " +
                                              word_label(s.letters.words(n).word(u),
                                                         s.letters.names)});
                    goto next_weight;
                }
    next_weight:;
    }
    return rep;
}

CheckReport check_hat_involutive(const AInftyStructure& s) {
    CheckReport rep{"hat_involutive", true, {}};
    const InvolutiveSpace& v = s.base;
    for (std::size_t n = 1; n <= s.trunc; ++n) {
        Matrix hat = hat_transport(v.space.degrees, s.m.comp[n], n, 1);
        WordSpace ws{v.dim(), n};
        int base_parity = parity(static_cast<long>(n) * (n + 1) / 2 - 1);
        for (std::size_t t = 0; t < ws.size(); ++t) {
            Word word = ws.word(t);
            // LHS: hat_m_n(x_t)* ; RHS: sign * hat_m_n applied to the
            // reversed involuted tuple.
            std::vector<Scalar> lhs = v.involution.apply(hat.col(t));
            std::vector<Scalar> tuple = reversed_involution_tuple(v, word);
            std::vector<Scalar> rhs = hat.apply(tuple);
            Scalar sgn = sign_scalar(parity(reversal_parity_v(v, word) + base_parity), v.field);
            rhs = sgn * rhs;
            if (!is_zero(lhs - rhs)) {
                rep.ok = false;
                rep.issues.push_back({static_cast<int>(n),
                                      "hat identity fails on (" + word_label(word, v.space.names) +
                                          ")"});
                break;
            }
        }
    }
    return rep;
}

CheckReport check_cyclic(const AInftyStructure& s) {
    if (!s.base.form) throw std::invalid_argument("check_cyclic requires a bilinear form");
    CheckReport rep{"cyclic", true, {}};
    const InvolutiveSpace& v = s.base;
    const Matrix& g = s.base.form->gram;
    for (std::size_t n = 1; n <= s.trunc; ++n) {
        Matrix hat = hat_transport(v.space.degrees, s.m.comp[n], n, 1);
        WordSpace tuples{v.dim(), n + 1};
        WordSpace args{v.dim(), n};
        bool weight_ok = true;
        for (std::size_t t = 0; t < tuples.size() && weight_ok; ++t) {
            Word word = tuples.word(t);
            Word left(word.begin(), word.begin() + n);
            Word rot(n);
            rot[0] = word[n];
            for (std::size_t i = 1; i < n; ++i) rot[i] = word[i - 1];
            Scalar lhs = Scalar::zero(v.field), rhs = Scalar::zero(v.field);
            std::size_t lcol = args.index(left), rcol = args.index(rot);
            for (std::size_t r = 0; r < v.dim(); ++r) {
                if (!hat.at(r, lcol).is_zero()) lhs += hat.at(r, lcol) * g.at(r, word[n]);
                if (!hat.at(r, rcol).is_zero()) rhs += hat.at(r, rcol) * g.at(r, word[n - 1]);
            }
            long eps = 0;
            for (std::size_t i = 0; i < n; ++i)
                eps += static_cast<long>(v.degree(word[n])) * v.degree(word[i]);
            Scalar sgn = sign_scalar(parity(eps + static_cast<long>(n)), v.field);
            if (lhs != sgn * rhs) {
                rep.ok = false;
                rep.issues.push_back({static_cast<int>(n),
                                      "cyclic identity fails on (" +
                                          word_label(word, v.space.names) + ")"});
                weight_ok = false;
            }
        }
    }
    return rep;
}

CheckReport check_structure(const AInftyStructure& s) {
    CheckReport all{"structure", true, {}};
    auto absorb = [&all](const CheckReport& r) {
        if (!r.ok) {
            all.ok = false;
            for (const auto& i : r.issues)
                all.issues.push_back({i.weight, r.check + ": " + i.witness});
        }
    };
    absorb(check_square_zero(s));
    if (s.involutive) absorb(check_involutive(s));
    if (s.cyclic) absorb(check_cyclic(s));
    return all;
}

Matrix cyclic_condition_rows(const AInftyStructure& s, std::size_t n, int h,
                             const std::vector<std::pair<std::size_t, std::size_t>>& columns) {
    if (!s.base.form) throw std::invalid_argument("cyclic conditions require a bilinear form");
    const InvolutiveSpace& v = s.base;
    const Matrix& g = s.base.form->gram;
    WordSpace tuples{v.dim(), n + 1};
    WordSpace args{v.dim(), n};

    // kappa(t): transport sign of the weight-n degree-h component at word t.
    auto kappa_sign = [&](const Word& word) {
        long term1 = 0, total = 0, term3 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            long a = v.degree(word[i]);
            term1 += static_cast<long>(n - 1 - i) * a;
            total += a;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                term3 += (1 - static_cast<long>(v.degree(word[i]))) *
                         (1 - static_cast<long>(v.degree(word[j])));
        long kappa = term1 + static_cast<long>(h) * (total - static_cast<long>(n)) + term3;
        return sign_scalar(parity(kappa), v.field);
    };

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> col_of;
    for (std::size_t c = 0; c < columns.size(); ++c) col_of[columns[c]] = c;

    Matrix rows(tuples.size(), columns.size(), v.field);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Word word = tuples.word(t);
        Word left(word.begin(), word.begin() + n);
        Word rot(n);
        rot[0] = word[n];
        for (std::size_t i = 1; i < n; ++i) rot[i] = word[i - 1];
        long eps = 0;
        for (std::size_t i = 0; i < n; ++i)
            eps += static_cast<long>(v.degree(word[n])) * v.degree(word[i]);
        Scalar rsgn = sign_scalar(parity(eps + static_cast<long>(n)), v.field);
        Scalar lk = kappa_sign(left), rk = kappa_sign(rot);
        std::size_t lcol = args.index(left), rcol = args.index(rot);
        // <hat(x_1..x_n), x_{n+1}> - sign <hat(x_{n+1},x_1..x_{n-1}), x_n>
        for (std::size_t j = 0; j < v.dim(); ++j) {
            if (!g.at(j, word[n]).is_zero()) {
                auto it = col_of.find({lcol, j});
                if (it != col_of.end()) rows.at(t, it->second) += lk * g.at(j, word[n]);
            }
            if (!g.at(j, word[n - 1]).is_zero()) {
                auto it = col_of.find({rcol, j});
                if (it != col_of.end()) rows.at(t, it->second) -= rsgn * rk * g.at(j, word[n - 1]);
            }
        }
    }
    return rows;
}

AInftyStructure from_dga(InvolutiveSpace v, std::size_t trunc, const Matrix& multiplication,
                         const Matrix& differential, bool involutive, bool cyclic) {
    std::size_t dim = v.dim();
    if (multiplication.rows() != dim || multiplication.cols() != dim * dim)
        throw std::invalid_argument("multiplication table has wrong shape");
    if (differential.rows() != dim || differential.cols() != dim)
        throw std::invalid_argument("differential has wrong shape");
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j)
                if (!multiplication.at(k, i * dim + j).is_zero() &&
                    v.degree(i) + v.degree(j) != v.degree(k))
                    throw std::invalid_argument("multiplication entry " + v.space.names[i] + "*" +
                                                v.space.names[j] + " -> " + v.space.names[k] +
                                                " is not degree 0");
            if (!differential.at(k, i).is_zero() && v.degree(i) + 1 != v.degree(k))
                throw std::invalid_argument("differential entry d(" + v.space.names[i] + ") -> " +
                                            v.space.names[k] + " is not degree 1");
        }

    std::map<std::size_t, Matrix> comps;
    std::vector<int> degs = v.space.degrees;
    if (trunc >= 1) comps[1] = hat_untransport(degs, differential, 1, 1);
    if (trunc >= 2) comps[2] = hat_untransport(degs, multiplication, 2, 1);
    return make_structure(std::move(v), trunc, comps, involutive, cyclic);
}

AInftyMorphism identity_morphism(const AInftyStructure& s) {
    AInftyMorphism phi;
    phi.source = &s;
    phi.target = &s;
    phi.comp.resize(s.trunc + 1);
    for (std::size_t n = 0; n <= s.trunc; ++n)
        phi.comp[n] = Matrix(s.letters.words(n).size(), s.letters.dim(), s.letters.field);
    if (s.trunc >= 1) phi.comp[1] = Matrix::identity(s.letters.dim(), s.letters.field);
    return phi;
}

MixedElement morphism_apply_word(const AInftyMorphism& phi, std::size_t weight, std::size_t idx) {
    const LetterSpace& src = phi.source->letters;
    const LetterSpace& tgt = phi.target->letters;
    std::size_t trunc = phi.source->trunc;
    WordSpace ws = tgt.words(weight);
    Word word = ws.word(idx);

    // phi(w_1 ... w_k) = phi(w_1) ... phi(w_k): convolve component columns.
    MixedElement acc;
    acc[0] = {Scalar::one(src.field)};
    for (std::size_t letter : word) {
        MixedElement next;
        for (const auto& [aw, avec] : acc) {
            for (std::size_t a = 0; a < avec.size(); ++a) {
                if (avec[a].is_zero()) continue;
                for (std::size_t n = 1; n < phi.comp.size(); ++n) {
                    std::size_t tw = aw + n;
                    if (tw > trunc) break;
                    const Matrix& cm = phi.comp[n];
                    if (cm.is_zero()) continue;
                    WordSpace tws = src.words(tw);
                    for (std::size_t z = 0; z < cm.rows(); ++z) {
                        const Scalar& c = cm.at(z, letter);
                        if (c.is_zero()) continue;
                        std::size_t out_idx = a * cm.rows() + z;  // concat in lex indexing
                        auto it = next.find(tw);
                        if (it == next.end())
                            it = next.emplace(tw, std::vector<Scalar>(tws.size(),
                                                                      Scalar::zero(src.field)))
                                     .first;
                        it->second[out_idx] += avec[a] * c;
                    }
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

MorphismReport check_morphism(const AInftyMorphism& phi) {
    const AInftyStructure& src = *phi.source;
    const AInftyStructure& tgt = *phi.target;
    if (src.trunc != tgt.trunc)
        throw std::invalid_argument("morphism endpoints have different truncations");
    MorphismReport out;
    out.compatibility = {"morphism_compatibility", true, {}};
    out.involutive = {"morphism_involutive", true, {}};
    out.cyclic = {"morphism_cyclic", true, {}};

    const LetterSpace& sw = src.letters;
    const LetterSpace& tw = tgt.letters;

    // (a) m . phi = phi . m' on target generators, per weight.
    for (std::size_t j = 0; j < tw.dim(); ++j) {
        MixedElement phij;
        for (std::size_t n = 1; n < phi.comp.size(); ++n)
            add_into(phij, n, phi.comp[n].col(j), Scalar::one(sw.field));
        MixedElement lhs = apply_to_mixed(sw, src.m, phij);

        MixedElement rhs;
        for (std::size_t a = 1; a <= tgt.trunc; ++a) {
            std::vector<Scalar> ma = tgt.m.comp[a].col(j);
            for (std::size_t u = 0; u < ma.size(); ++u) {
                if (ma[u].is_zero()) continue;
                MixedElement img = morphism_apply_word(phi, a, u);
                for (auto& [wt, vec] : img) add_into(rhs, wt, vec, ma[u]);
            }
        }
        for (std::size_t n = 0; n <= src.trunc; ++n) {
            std::vector<Scalar> l(sw.words(n).size(), Scalar::zero(sw.field));
            std::vector<Scalar> r = l;
            if (auto it = lhs.find(n); it != lhs.end()) l = it->second;
            if (auto it = rhs.find(n); it != rhs.end()) r = it->second;
            if (!is_zero(l - r)) {
                out.compatibility.ok = false;
                out.compatibility.issues.push_back(
                    {static_cast<int>(n),
                     "m.phi != phi.m' on generator " + tw.names[j] + " at weight " +
                         std::to_string(n)});
            }
        }
    }

    // (b) phi(x*) = phi(x)*: phi_n . P_target = S_n . phi_n per weight.
    for (std::size_t n = 1; n < phi.comp.size(); ++n) {
        Matrix lhs = phi.comp[n] * tw.involution;
        Matrix rhs(phi.comp[n].rows(), phi.comp[n].cols(), sw.field);
        for (std::size_t j = 0; j < phi.comp[n].cols(); ++j)
            rhs.set_col(j, involute_vector(sw, n, phi.comp[n].col(j)));
        if (!(lhs == rhs)) {
            out.involutive.ok = false;
            out.involutive.issues.push_back(
                {static_cast<int>(n), "phi does not intertwine the involutions at weight " +
                                          std::to_string(n)});
        }
    }

    // (c) form preservation, unwrapped on the n-ary maps.
    if (src.base.form && tgt.base.form) {
        const Matrix& gs = src.base.form->gram;
        const Matrix& gt = tgt.base.form->gram;
        std::vector<Matrix> hat(phi.comp.size());
        for (std::size_t n = 1; n < phi.comp.size(); ++n)
            hat[n] = hat_transport(src.base.space.degrees, phi.comp[n], n, 0);
        if (!(hat[1].transposed() * gt * hat[1] == gs)) {
            out.cyclic.ok = false;
            out.cyclic.issues.push_back({1, "<phi_1(a), phi_1(b)> != <a, b>"});
        }
        // The quadratic part of phi(omega') = omega is the identity above;
        // the weight-n parts for n >= 3 are the vanishing cross sums.
        for (std::size_t n = 3; n <= src.trunc; ++n) {
            WordSpace tuples{src.base.dim(), n};
            bool fail = false;
            for (std::size_t t = 0; t < tuples.size() && !fail; ++t) {
                Word word = tuples.word(t);
                Scalar total = Scalar::zero(sw.field);
                for (std::size_t i = 1; i < n; ++i) {
                    std::size_t jn = n - i;
                    WordSpace lw{src.base.dim(), i}, rw{src.base.dim(), jn};
                    Word lword(word.begin(), word.begin() + i);
                    Word rword(word.begin() + i, word.end());
                    long eps = 0;
                    for (std::size_t k = 0; k < i; ++k)
                        eps += (1 - static_cast<long>(jn)) * src.base.degree(word[k]);
                    Scalar sgn = sign_scalar(parity(eps), sw.field);
                    std::vector<Scalar> a = hat[i].col(lw.index(lword));
                    std::vector<Scalar> b = hat[jn].col(rw.index(rword));
                    std::vector<Scalar> gb = gt.apply(b);
                    Scalar pair = Scalar::zero(sw.field);
                    for (std::size_t r = 0; r < a.size(); ++r)
                        if (!a[r].is_zero()) pair += a[r] * gb[r];
                    total += sgn * pair;
                }
                if (!total.is_zero()) {
                    out.cyclic.ok = false;
                    out.cyclic.issues.push_back(
                        {static_cast<int>(n), "form compatibility fails on (" +
                                                  word_label(word, src.base.space.names) + ")"});
                    fail = true;
                }
            }
        }
    }
    return out;
}

}  // namespace dihedra
