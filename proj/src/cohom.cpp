#include "dihedra/cohom.hpp"

#include <stdexcept>

namespace dihedra {

namespace {

struct DegreeIndex {
    // Per weight: the (word, generator) elements, plus offsets into the
    // degree's flat coordinate space.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> elems;  // by weight
    std::vector<std::size_t> offset;
    std::size_t total = 0;

    long find(std::size_t n, std::size_t u, std::size_t j) const {
        const auto& v = elems[n];
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i].first == u && v[i].second == j)
                return static_cast<long>(offset[n] + i);
        return -1;
    }
};

DegreeIndex degree_index(const AInftyStructure& s, int h) {
    DegreeIndex di;
    di.elems.resize(s.trunc + 1);
    di.offset.resize(s.trunc + 1, 0);
    for (std::size_t n = 0; n <= s.trunc; ++n) {
        di.offset[n] = di.total;
        di.elems[n] = hom_block_basis(s, n, h);
        di.total += di.elems[n].size();
    }
    return di;
}

Derivation elementary(const AInftyStructure& s, std::size_t n, std::size_t u, std::size_t j,
                      int h) {
    Derivation e = Derivation::zero(s.letters, h, s.trunc);
    e.comp[n].at(u, j) = Scalar::one(s.letters.field);
    return e;
}

// Flat coordinates of a derivation inside a degree index; throws if a
// nonzero entry falls outside the index (degree mismatch).
std::vector<Scalar> derivation_coords(const AInftyStructure& s, const Derivation& d,
                                      const DegreeIndex& di) {
    std::vector<Scalar> out(di.total, Scalar::zero(s.letters.field));
    for (std::size_t n = 0; n <= s.trunc; ++n) {
        const Matrix& c = d.comp[n];
        for (std::size_t u = 0; u < c.rows(); ++u)
            for (std::size_t j = 0; j < c.cols(); ++j) {
                if (c.at(u, j).is_zero()) continue;
                long idx = di.find(n, u, j);
                if (idx < 0) throw std::logic_error("derivation entry outside degree block");
                out[static_cast<std::size_t>(idx)] = c.at(u, j);
            }
    }
    return out;
}

Derivation derivation_from_coords(const AInftyStructure& s, const DegreeIndex& di, int h,
                                  const std::vector<Scalar>& coords) {
    Derivation d = Derivation::zero(s.letters, h, s.trunc);
    for (std::size_t n = 0; n <= s.trunc; ++n)
        for (std::size_t i = 0; i < di.elems[n].size(); ++i) {
            const Scalar& c = coords[di.offset[n] + i];
            if (!c.is_zero()) d.comp[n].at(di.elems[n][i].first, di.elems[n][i].second) = c;
        }
    return d;
}

// Matrix of the derivation involution on one (degree, weight) block.
Matrix block_involution(const AInftyStructure& s, const DegreeIndex& di, std::size_t n) {
    const auto& elems = di.elems[n];
    const LetterSpace& w = s.letters;
    Matrix t(elems.size(), elems.size(), w.field);
    for (std::size_t c = 0; c < elems.size(); ++c) {
        auto [u, j] = elems[c];
        // T(E_{u,j}) = sum_{j'} P_{j,j'} sum_{u'} S_n[u', u] E_{u',j'}
        std::vector<Scalar> su = involute_word(w, n, u);
        for (std::size_t jp = 0; jp < w.dim(); ++jp) {
            const Scalar& p = w.involution.at(j, jp);
            if (p.is_zero()) continue;
            for (std::size_t up = 0; up < su.size(); ++up) {
                if (su[up].is_zero()) continue;
                long idx = di.find(n, up, jp);
                if (idx < 0) throw std::logic_error("involution leaves degree block");
                t.at(static_cast<std::size_t>(idx) - di.offset[n], c) += p * su[up];
            }
        }
    }
    return t;
}

void require_square_zero(const AInftyStructure& s) {
    if (!check_square_zero(s).ok)
        throw std::invalid_argument("structure does not satisfy m^2 = 0");
}

// Complexes with weight-0 blocks see one weight past the truncation
// through [m, xi_0], so they need the square to vanish there as well.
void require_square_zero_extended(const AInftyStructure& s) {
    require_square_zero(s);
    if (!square_zero_through(s, s.trunc + 1))
        throw std::invalid_argument(
            "m^2 does not vanish at weight " + std::to_string(s.trunc + 1) +
            "; the truncated derivation complex is not determined");
}

void require_involutive(const AInftyStructure& s) {
    if (!s.involutive || !check_involutive(s).ok)
        throw std::invalid_argument("structure is not involutive");
}

void require_cyclic(const AInftyStructure& s) {
    if (!s.base.form) throw std::invalid_argument("structure has no bilinear form");
    if (s.base.form->gram.is_zero())
        throw std::invalid_argument("zero bilinear form is degenerate");
    if (!s.cyclic || !check_cyclic(s).ok)
        throw std::invalid_argument("structure is not cyclic");
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> hom_block_basis(const AInftyStructure& s,
                                                                 std::size_t n, int h) {
    const LetterSpace& w = s.letters;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    auto buckets = words_by_degree(w.dim(), n, w.degrees);
    for (std::size_t j = 0; j < w.dim(); ++j) {
        auto it = buckets.find(w.degrees[j] + h);
        if (it == buckets.end()) continue;
        for (std::size_t u : it->second) out.emplace_back(u, j);
    }
    return out;
}

CochainComplex hochschild_complex(const AInftyStructure& s, int lo, int hi) {
    require_square_zero_extended(s);
    CochainComplex c;
    c.label = "CH";
    c.kind = WeightKind::Derivation;
    c.trunc = s.trunc;
    c.field = s.letters.field;
    c.report_lo = lo;
    c.report_hi = hi;
    c.lo = lo - 1;
    c.hi = hi + 1;

    std::map<int, DegreeIndex> idx;
    for (int k = c.lo; k <= c.hi; ++k) {
        idx[k] = degree_index(s, k - 1);
        std::vector<CochainBlock> blist;
        for (std::size_t n = 0; n <= s.trunc; ++n)
            blist.push_back({n, idx[k].elems[n].size()});
        c.blocks[k] = std::move(blist);
    }
    for (int k = c.lo; k < c.hi; ++k) {
        const DegreeIndex& src = idx[k];
        const DegreeIndex& dst = idx[k + 1];
        Matrix d(dst.total, src.total, c.field);
        for (std::size_t n = 0; n <= s.trunc; ++n)
            for (std::size_t i = 0; i < src.elems[n].size(); ++i) {
                auto [u, j] = src.elems[n][i];
                Derivation de = commutator(s.letters, s.m, elementary(s, n, u, j, k - 1));
                std::vector<Scalar> col = derivation_coords(s, de, dst);
                d.set_col(src.offset[n] + i, col);
            }
        c.diff[k] = std::move(d);
    }
    c.validate_d_squared();
    return c;
}

std::pair<CochainComplex, CochainComplex> hochschild_pm_complexes(const AInftyStructure& s,
                                                                  int lo, int hi) {
    require_involutive(s);
    CochainComplex full = hochschild_complex(s, lo, hi);

    const FieldSpec& f = full.field;
    Scalar half = Scalar::one(f) / Scalar::in_field(2, f);

    CochainComplex plus = full, minus = full;
    plus.label = "CH+";
    minus.label = "CH-";
    plus.blocks.clear();
    plus.diff.clear();
    minus.blocks.clear();
    minus.diff.clear();

    // Per degree and weight: eigenbases of the block involution, plus the
    // degree-wide basis/coordinate maps used to restrict the differential.
    std::map<int, std::vector<SubspaceBasis>> pbases, mbases;
    std::map<int, DegreeIndex> idx;
    for (int k = full.lo; k <= full.hi; ++k) {
        idx[k] = degree_index(s, k - 1);
        std::vector<CochainBlock> pb, mb;
        for (std::size_t n = 0; n <= s.trunc; ++n) {
            std::size_t bd = idx[k].elems[n].size();
            Matrix t = block_involution(s, idx[k], n);
            Matrix gp(bd, bd, f), gm(bd, bd, f);
            for (std::size_t cc = 0; cc < bd; ++cc)
                for (std::size_t r = 0; r < bd; ++r) {
                    Scalar tv = t.at(r, cc);
                    Scalar idv = Scalar::in_field(r == cc ? 1 : 0, f);
                    gp.at(r, cc) = half * (idv + tv);
                    gm.at(r, cc) = half * (idv - tv);
                }
            SubspaceBasis sp(gp), sm(gm);
            pb.push_back({n, sp.dim()});
            mb.push_back({n, sm.dim()});
            pbases[k].push_back(std::move(sp));
            mbases[k].push_back(std::move(sm));
        }
        plus.blocks[k] = std::move(pb);
        minus.blocks[k] = std::move(mb);
    }

    auto restrict_diff = [&](CochainComplex& out, std::map<int, std::vector<SubspaceBasis>>& bases) {
        for (int k = full.lo; k < full.hi; ++k) {
            const Matrix& d = full.diff.at(k);
            std::size_t sdim = out.dim(k), tdim = out.dim(k + 1);
            Matrix nd(tdim, sdim, f);
            std::size_t colpos = 0;
            for (std::size_t n = 0; n <= s.trunc; ++n) {
                const SubspaceBasis& sb = bases[k][n];
                for (std::size_t bcol = 0; bcol < sb.dim(); ++bcol, ++colpos) {
                    // Embed the eigenvector, push through d, re-read per block.
                    std::vector<Scalar> amb(full.dim(k), Scalar::zero(f));
                    for (std::size_t r = 0; r < sb.ambient_dim(); ++r)
                        amb[idx[k].offset[n] + r] = sb.basis().at(r, bcol);
                    std::vector<Scalar> img = d.apply(amb);
                    std::size_t rowpos = 0;
                    for (std::size_t np = 0; np <= s.trunc; ++np) {
                        const SubspaceBasis& tb = bases[k + 1][np];
                        std::vector<Scalar> seg(idx[k + 1].elems[np].size(), Scalar::zero(f));
                        for (std::size_t r = 0; r < seg.size(); ++r)
                            seg[r] = img[idx[k + 1].offset[np] + r];
                        std::vector<Scalar> coords = tb.coords(seg);
                        for (std::size_t r = 0; r < coords.size(); ++r)
                            nd.at(rowpos + r, colpos) = coords[r];
                        rowpos += tb.dim();
                    }
                }
            }
            out.diff[k] = std::move(nd);
        }
        out.validate_d_squared();
    };
    restrict_diff(plus, pbases);
    restrict_diff(minus, mbases);
    return {plus, minus};
}

namespace {

struct CoinvCache {
    std::vector<CoinvariantSpace> byweight;  // index = weight, [0] unused
    // class degrees per weight
    std::vector<std::vector<int>> degrees;
};

CoinvCache coinv_cache(const AInftyStructure& s, CoinvGroup group, std::size_t max_weight) {
    CoinvCache cc;
    cc.byweight.resize(max_weight + 1);
    cc.degrees.resize(max_weight + 1);
    for (std::size_t i = 1; i <= max_weight; ++i) {
        cc.byweight[i] = coinvariants(s.letters, i, group);
        WordSpace ws = s.letters.words(i);
        for (std::size_t q = 0; q < cc.byweight[i].dim; ++q)
            cc.degrees[i].push_back(
                word_degree(ws.word(cc.byweight[i].rep_words[q]), s.letters.degrees));
    }
    return cc;
}

// Assert the induced differential is independent of the chosen lift: m must
// send every defining relation back into the relation subspace.
void assert_well_defined(const AInftyStructure& s, const CoinvCache& cc, CoinvGroup group) {
    const LetterSpace& w = s.letters;
    for (std::size_t i = 1; i <= s.trunc; ++i) {
        WordSpace ws = w.words(i);
        for (std::size_t u = 0; u < ws.size(); ++u) {
            std::vector<std::vector<Scalar>> relations;
            auto [sgn, v] = rotate_word(w, i, u);
            std::vector<Scalar> rel(ws.size(), Scalar::zero(w.field));
            rel[u] += Scalar::one(w.field);
            rel[v] -= Scalar::in_field(sgn, w.field);
            relations.push_back(std::move(rel));
            if (group != CoinvGroup::Cyclic) {
                std::vector<Scalar> img = involute_word(w, i, u);
                std::vector<Scalar> srel(ws.size(), Scalar::zero(w.field));
                srel[u] += Scalar::one(w.field);
                Scalar flip = Scalar::in_field(group == CoinvGroup::DihedralMinus ? -1 : 1,
                                               w.field);
                for (std::size_t k = 0; k < img.size(); ++k) srel[k] -= flip * img[k];
                relations.push_back(std::move(srel));
            }
            for (const auto& r : relations) {
                if (is_zero(r)) continue;
                MixedElement mr = apply_to_vector(w, s.m, i, r);
                for (auto& [tw, vec] : mr) {
                    if (tw < 1 || tw > s.trunc) continue;
                    std::vector<Scalar> cls = cc.byweight[tw].projection.apply(vec);
                    if (!is_zero(cls))
                        throw std::logic_error(
                            "induced differential is not well defined at weight " +
                            std::to_string(i));
                }
            }
        }
    }
}

CochainComplex coinvariant_complex(const AInftyStructure& s, CoinvGroup group,
                                   const std::string& label, int lo, int hi) {
    CochainComplex c;
    c.label = label;
    c.kind = WeightKind::Tensor;
    c.trunc = s.trunc;
    c.field = s.letters.field;
    c.report_lo = lo;
    c.report_hi = hi;
    c.lo = lo - 1;
    c.hi = hi + 1;

    CoinvCache cc = coinv_cache(s, group, s.trunc);
    assert_well_defined(s, cc, group);

    // Per degree, per weight: the participating class indices.
    std::map<int, std::vector<std::vector<std::size_t>>> classes;
    for (int k = c.lo; k <= c.hi; ++k) {
        classes[k].resize(s.trunc + 1);
        std::vector<CochainBlock> blist;
        for (std::size_t i = 1; i <= s.trunc; ++i) {
            for (std::size_t q = 0; q < cc.byweight[i].dim; ++q)
                if (cc.degrees[i][q] == k + 1) classes[k][i].push_back(q);
            blist.push_back({i, classes[k][i].size()});
        }
        c.blocks[k] = std::move(blist);
    }

    auto flat_index = [&](int k, std::size_t weight, std::size_t q) -> long {
        std::size_t off = 0;
        for (std::size_t i = 1; i <= s.trunc; ++i) {
            const auto& cls = classes[k][i];
            for (std::size_t a = 0; a < cls.size(); ++a) {
                if (i == weight && cls[a] == q) return static_cast<long>(off + a);
            }
            off += cls.size();
        }
        return -1;
    };

    for (int k = c.lo; k < c.hi; ++k) {
        Matrix d(c.dim(k + 1), c.dim(k), c.field);
        std::size_t col = 0;
        for (std::size_t i = 1; i <= s.trunc; ++i) {
            for (std::size_t q : classes[k][i]) {
                std::vector<Scalar> lift = cc.byweight[i].section.col(q);
                MixedElement md = apply_to_vector(s.letters, s.m, i, lift);
                for (auto& [tw, vec] : md) {
                    if (tw < 1 || tw > s.trunc) continue;
                    std::vector<Scalar> cls = cc.byweight[tw].projection.apply(vec);
                    for (std::size_t qp = 0; qp < cls.size(); ++qp) {
                        if (cls[qp].is_zero()) continue;
                        long r = flat_index(k + 1, tw, qp);
                        if (r < 0)
                            throw std::logic_error(label + ": class outside target degree");
                        d.at(static_cast<std::size_t>(r), col) += cls[qp];
                    }
                }
                ++col;
            }
        }
        c.diff[k] = std::move(d);
    }
    c.validate_d_squared();
    return c;
}

}  // namespace

CochainComplex cyclic_complex(const AInftyStructure& s, int lo, int hi) {
    require_square_zero(s);
    return coinvariant_complex(s, CoinvGroup::Cyclic, "CC", lo, hi);
}

std::pair<CochainComplex, CochainComplex> dihedral_complexes(const AInftyStructure& s, int lo,
                                                             int hi) {
    require_involutive(s);
    require_square_zero(s);
    return {coinvariant_complex(s, CoinvGroup::DihedralPlus, "CD+", lo, hi),
            coinvariant_complex(s, CoinvGroup::DihedralMinus, "CD-", lo, hi)};
}

CyclicDerivationComplexes cyclic_derivation_complexes(const AInftyStructure& s, int lo, int hi) {
    require_square_zero_extended(s);
    require_cyclic(s);
    const FieldSpec& f = s.letters.field;
    Scalar half = Scalar::one(f) / Scalar::in_field(2, f);

    CyclicDerivationComplexes out;
    bool with_pm = s.involutive && check_involutive(s).ok;

    auto base_complex = [&](const std::string& label) {
        CochainComplex c;
        c.label = label;
        c.kind = WeightKind::Derivation;
        c.trunc = s.trunc;
        c.field = f;
        c.report_lo = lo;
        c.report_hi = hi;
        c.lo = lo - 1;
        c.hi = hi + 1;
        return c;
    };
    out.whole = base_complex("Dercyc");
    if (with_pm) {
        out.plus = base_complex("Dercyc+");
        out.minus = base_complex("Dercyc-");
    }

    // Per degree/weight: cyclic subspace basis (in block coordinates) and
    // its eigen refinements.
    std::map<int, DegreeIndex> idx;
    std::map<int, std::vector<SubspaceBasis>> cyc, cplus, cminus;
    for (int k = out.whole.lo; k <= out.whole.hi; ++k) {
        idx[k] = degree_index(s, k - 1);
        std::vector<CochainBlock> wb, pb, mb;
        for (std::size_t n = 0; n <= s.trunc; ++n) {
            const auto& elems = idx[k].elems[n];
            Matrix gens;
            if (n == 0) {
                gens = Matrix::identity(elems.size(), f);
            } else {
                Matrix cond = cyclic_condition_rows(s, n, k - 1, elems);
                auto ker = kernel_basis(cond);
                gens = Matrix(elems.size(), ker.size(), f);
                for (std::size_t c2 = 0; c2 < ker.size(); ++c2) gens.set_col(c2, ker[c2]);
            }
            SubspaceBasis sb(gens);
            wb.push_back({n, sb.dim()});
            if (with_pm) {
                Matrix t = block_involution(s, idx[k], n);
                Matrix gp(elems.size(), sb.dim(), f), gm(elems.size(), sb.dim(), f);
                for (std::size_t c2 = 0; c2 < sb.dim(); ++c2) {
                    std::vector<Scalar> b = sb.basis().col(c2);
                    std::vector<Scalar> tb = t.apply(b);
                    gp.set_col(c2, half * (b + tb));
                    gm.set_col(c2, half * (b - tb));
                }
                SubspaceBasis sp(gp), sm(gm);
                pb.push_back({n, sp.dim()});
                mb.push_back({n, sm.dim()});
                cplus[k].push_back(std::move(sp));
                cminus[k].push_back(std::move(sm));
            }
            cyc[k].push_back(std::move(sb));
        }
        out.whole.blocks[k] = std::move(wb);
        if (with_pm) {
            out.plus->blocks[k] = std::move(pb);
            out.minus->blocks[k] = std::move(mb);
        }
    }

    auto build_diff = [&](CochainComplex& c, std::map<int, std::vector<SubspaceBasis>>& bases) {
        for (int k = c.lo; k < c.hi; ++k) {
            Matrix d(c.dim(k + 1), c.dim(k), f);
            std::size_t col = 0;
            for (std::size_t n = 0; n <= s.trunc; ++n) {
                const SubspaceBasis& sb = bases[k][n];
                for (std::size_t bcol = 0; bcol < sb.dim(); ++bcol, ++col) {
                    std::vector<Scalar> amb = sb.basis().col(bcol);
                    Derivation xi = Derivation::zero(s.letters, k - 1, s.trunc);
                    for (std::size_t i = 0; i < amb.size(); ++i)
                        if (!amb[i].is_zero()) {
                            auto [u, j] = idx[k].elems[n][i];
                            xi.comp[n].at(u, j) = amb[i];
                        }
                    Derivation dxi = commutator(s.letters, s.m, xi);
                    std::vector<Scalar> flat = derivation_coords(s, dxi, idx[k + 1]);
                    std::size_t rowpos = 0;
                    for (std::size_t np = 0; np <= s.trunc; ++np) {
                        const SubspaceBasis& tb = bases[k + 1][np];
                        std::vector<Scalar> seg(idx[k + 1].elems[np].size(), Scalar::zero(f));
                        for (std::size_t r = 0; r < seg.size(); ++r)
                            seg[r] = flat[idx[k + 1].offset[np] + r];
                        // coords() certifies [m, -] stays inside the cut
                        // subspace (m is cyclic, so it must).
                        std::vector<Scalar> coords = tb.coords(seg);
                        for (std::size_t r = 0; r < coords.size(); ++r)
                            d.at(rowpos + r, col) = coords[r];
                        rowpos += tb.dim();
                    }
                }
            }
            c.diff[k] = std::move(d);
        }
        c.validate_d_squared();
    };
    build_diff(out.whole, cyc);
    if (with_pm) {
        build_diff(*out.plus, cplus);
        build_diff(*out.minus, cminus);
    }
    return out;
}

// f on the weight-n block, before projecting to coinvariants: the (word,
// generator) entry (u, j) maps to sum_i sign * G_{j,i} * (i,u).
//
// The sign is the Koszul sign (-1)^{|u| |slot|} where the slot carries the
// degree b_j + d of the pairing partner after the form shift. The map is
// scaled by 1/(n+1): a cyclic derivation lands on an r-invariant tensor and
// the scaling matches the orbit-average identification of invariants with
// coinvariants. This normalization is what makes f([m,xi]) = m(f(xi)) hold
// on classes.
Matrix cc_der_map(const AInftyStructure& s, std::size_t n) {
    const LetterSpace& w = s.letters;
    const Matrix& g = s.base.form->gram;
    int d = s.base.form->degree;
    WordSpace src = w.words(n);
    WordSpace dst = w.words(n + 1);
    std::size_t cols = src.size() * w.dim();
    Scalar norm = Scalar::one(w.field) / Scalar::in_field(static_cast<long>(n) + 1, w.field);
    Matrix f(dst.size(), cols, w.field);
    for (std::size_t u = 0; u < src.size(); ++u) {
        int udeg = word_degree(src.word(u), w.degrees);
        for (std::size_t j = 0; j < w.dim(); ++j) {
            std::size_t col = j * src.size() + u;
            long par = static_cast<long>(udeg + d) * (w.degrees[j] + d);
            Scalar sgn = Scalar::in_field((par % 2 + 2) % 2 ? -1 : 1, w.field);
            for (std::size_t i = 0; i < w.dim(); ++i) {
                if (g.at(j, i).is_zero()) continue;
                f.at(i * src.size() + u, col) += norm * sgn * g.at(j, i);
            }
        }
    }
    return f;
}

namespace {

// Ambient column indexing used by the isomorphism: (u, j) -> j*words + u.
std::vector<Scalar> ambient_from_derivation_weight(const AInftyStructure& s, const Derivation& d,
                                                   std::size_t n) {
    WordSpace ws = s.letters.words(n);
    std::vector<Scalar> v(ws.size() * s.letters.dim(), Scalar::zero(s.letters.field));
    for (std::size_t u = 0; u < ws.size(); ++u)
        for (std::size_t j = 0; j < s.letters.dim(); ++j)
            v[j * ws.size() + u] = d.comp[n].at(u, j);
    return v;
}

}  // namespace

SubspaceBasis cyclic_derivation_block(const AInftyStructure& s, std::size_t n) {
    const LetterSpace& w = s.letters;
    WordSpace ws = w.words(n);
    std::size_t amb = ws.size() * w.dim();
    if (n == 0) return SubspaceBasis(Matrix::identity(amb, w.field));

    // All (u, j) pairs in the iso's ambient order.
    std::vector<std::pair<std::size_t, std::size_t>> elems;
    for (std::size_t j = 0; j < w.dim(); ++j)
        for (std::size_t u = 0; u < ws.size(); ++u) elems.emplace_back(u, j);
    // The cyclic identity is degree-blockwise, but the block degree h enters
    // the transport sign; impose conditions per homogeneous slice.
    Matrix gens(amb, 0, w.field);
    std::map<int, std::vector<std::size_t>> slices;
    for (std::size_t c = 0; c < elems.size(); ++c) {
        auto [u, j] = elems[c];
        int h = word_degree(ws.word(u), w.degrees) - w.degrees[j];
        slices[h].push_back(c);
    }
    std::vector<std::vector<Scalar>> basis_cols;
    for (auto& [h, cols] : slices) {
        std::vector<std::pair<std::size_t, std::size_t>> sub;
        for (std::size_t c : cols) sub.push_back(elems[c]);
        Matrix cond = cyclic_condition_rows(s, n, h, sub);
        for (auto& kv : kernel_basis(cond)) {
            std::vector<Scalar> v(amb, Scalar::zero(w.field));
            for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = kv[c];
            basis_cols.push_back(std::move(v));
        }
    }
    Matrix g(amb, basis_cols.size(), w.field);
    for (std::size_t c = 0; c < basis_cols.size(); ++c) g.set_col(c, basis_cols[c]);
    return SubspaceBasis(g);
}

IsoReport cc_der_isomorphism(const AInftyStructure& s) {
    require_square_zero(s);
    require_cyclic(s);
    if (!s.base.form_nondegenerate()) {
        auto ker = kernel_basis(s.base.form->gram);
        std::string w = "degenerate form; radical vector ";
        if (!ker.empty()) {
            bool first = true;
            for (std::size_t i = 0; i < ker[0].size(); ++i) {
                if (ker[0][i].is_zero()) continue;
                w += (first ? "" : " + ") + ker[0][i].str() + "*" + s.base.space.names[i];
                first = false;
            }
        }
        throw std::domain_error(w);
    }

    const LetterSpace& w = s.letters;
    IsoReport rep;
    if (s.trunc == 0) return rep;

    CoinvCache cc = coinv_cache(s, CoinvGroup::Cyclic, s.trunc);
    bool with_pm = s.involutive && check_involutive(s).ok;

    std::vector<SubspaceBasis> cyc(s.trunc);
    std::vector<Matrix> fproj(s.trunc);  // projection . f, on ambient coords
    for (std::size_t n = 0; n < s.trunc; ++n) {
        cyc[n] = cyclic_derivation_block(s, n);
        fproj[n] = cc.byweight[n + 1].projection * cc_der_map(s, n);

        IsoWeightRow row;
        row.der_weight = n;
        row.der_dim = cyc[n].dim();
        row.cc_dim = cc.byweight[n + 1].dim;
        Matrix restricted = fproj[n] * cyc[n].basis();
        row.bijective = row.der_dim == row.cc_dim && rank(restricted) == row.der_dim;
        if (!row.bijective) {
            rep.ok = false;
            rep.witnesses.push_back("weight " + std::to_string(n) + ": dims " +
                                    std::to_string(row.der_dim) + " vs " +
                                    std::to_string(row.cc_dim));
        }

        if (with_pm) {
            // f must intertwine the derivation involution with the tensor
            // involution on the coinvariants.
            const CoinvariantSpace& ci = cc.byweight[n + 1];
            Matrix s_cc =
                ci.projection * tensor_involution_matrix(w, n + 1) * ci.section;
            WordSpace ws = w.words(n);
            Matrix t_amb(cyc[n].ambient_dim(), cyc[n].ambient_dim(), w.field);
            for (std::size_t j = 0; j < w.dim(); ++j)
                for (std::size_t u = 0; u < ws.size(); ++u) {
                    // T(E_{u,j}) columns in ambient order
                    std::vector<Scalar> su = involute_word(w, n, u);
                    for (std::size_t jp = 0; jp < w.dim(); ++jp) {
                        const Scalar& p = w.involution.at(j, jp);
                        if (p.is_zero()) continue;
                        for (std::size_t up = 0; up < su.size(); ++up)
                            if (!su[up].is_zero())
                                t_amb.at(jp * ws.size() + up, j * ws.size() + u) += p * su[up];
                    }
                }
            Matrix lhs = fproj[n] * t_amb * cyc[n].basis();
            Matrix rhs = s_cc * restricted;
            row.plus_minus_match = lhs == rhs;
            if (!row.plus_minus_match) {
                rep.pm_ok = false;
                rep.ok = false;
                rep.witnesses.push_back("weight " + std::to_string(n) +
                                        ": f does not intertwine the involutions");
            }
        }
        rep.rows.push_back(row);
    }

    // Chain identity f([m, xi]) = m(f(xi)), compared classwise per weight.
    for (std::size_t n = 0; n < s.trunc; ++n) {
        WordSpace ws = w.words(n);
        for (std::size_t bcol = 0; bcol < cyc[n].dim() && rep.chain_ok; ++bcol) {
            std::vector<Scalar> amb = cyc[n].basis().col(bcol);
            Derivation xi = Derivation::zero(w, 0, s.trunc);  // degree bookkeeping unused here
            for (std::size_t j = 0; j < w.dim(); ++j)
                for (std::size_t u = 0; u < ws.size(); ++u)
                    xi.comp[n].at(u, j) = amb[j * ws.size() + u];
            // Mixed-degree blocks decompose into homogeneous parts; compute
            // the bracket per homogeneous slice to keep Koszul signs right.
            std::map<int, Derivation> parts;
            for (std::size_t u = 0; u < ws.size(); ++u)
                for (std::size_t j = 0; j < w.dim(); ++j) {
                    const Scalar& cv = xi.comp[n].at(u, j);
                    if (cv.is_zero()) continue;
                    int h = word_degree(ws.word(u), w.degrees) - w.degrees[j];
                    auto it = parts.find(h);
                    if (it == parts.end())
                        it = parts.emplace(h, Derivation::zero(w, h, s.trunc)).first;
                    it->second.comp[n].at(u, j) = cv;
                }
            std::map<std::size_t, std::vector<Scalar>> lhs;  // CC weight -> class vector
            for (auto& [h, part] : parts) {
                Derivation dxi = commutator(w, s.m, part);
                for (std::size_t np = 0; np < s.trunc; ++np) {
                    if (dxi.comp[np].is_zero()) continue;
                    std::vector<Scalar> acc =
                        fproj[np].apply(ambient_from_derivation_weight(s, dxi, np));
                    auto it = lhs.find(np + 1);
                    if (it == lhs.end())
                        lhs[np + 1] = acc;
                    else
                        it->second = it->second + acc;
                }
            }
            // RHS: project f(xi), lift, apply m, project.
            std::vector<Scalar> cls = fproj[n].apply(amb);
            std::vector<Scalar> lift = cc.byweight[n + 1].section.apply(cls);
            MixedElement md = apply_to_vector(w, s.m, n + 1, lift);
            std::map<std::size_t, std::vector<Scalar>> rhs;
            for (auto& [tw, vec] : md) {
                if (tw < 1 || tw > s.trunc) continue;
                rhs[tw] = cc.byweight[tw].projection.apply(vec);
            }
            for (std::size_t ccw = 1; ccw <= s.trunc; ++ccw) {
                std::vector<Scalar> l(cc.byweight[ccw].dim, Scalar::zero(w.field));
                std::vector<Scalar> r = l;
                if (auto it = lhs.find(ccw); it != lhs.end()) l = it->second;
                if (auto it = rhs.find(ccw); it != rhs.end()) r = it->second;
                if (!is_zero(l - r)) {
                    rep.chain_ok = false;
                    rep.ok = false;
                    rep.witnesses.push_back("chain identity fails from weight " +
                                            std::to_string(n) + " into weight " +
                                            std::to_string(ccw));
                    break;
                }
            }
        }
    }
    return rep;
}

CCElement cc_canonical(const AInftyStructure& s, const CCElement& x) {
    CoinvariantSpace ci = coinvariants(s.letters, x.weight, CoinvGroup::Cyclic);
    CCElement out;
    out.weight = x.weight;
    out.rep = ci.section.apply(ci.projection.apply(x.rep));
    return out;
}

CCElement cc_bracket(const AInftyStructure& s, const CCElement& x, const CCElement& y) {
    if (!s.base.form || !s.base.form_nondegenerate())
        throw std::domain_error("cc_bracket requires a non-degenerate form");
    const LetterSpace& w = s.letters;
    const FieldSpec& fld = w.field;
    std::size_t n = x.weight, m = y.weight;
    if (n < 1 || m < 1) throw std::invalid_argument("cc_bracket inputs must have weight >= 1");
    int d = s.base.form->degree;
    Matrix ginv = inverse(s.base.form->gram);

    CCElement out;
    out.weight = n + m - 2;
    WordSpace ows = w.words(out.weight);
    out.rep.assign(ows.size(), Scalar::zero(fld));
    // The cyclic complex starts at weight 1: a scalar output (weight 0) and
    // anything past the truncation are both zero in it.
    if (out.weight < 1 || out.weight > s.trunc) return out;

    WordSpace xws = w.words(n), yws = w.words(m);
    auto parity = [](long v) { return ((v % 2) + 2) % 2; };

    for (std::size_t xu = 0; xu < x.rep.size(); ++xu) {
        if (x.rep[xu].is_zero()) continue;
        Word xw = xws.word(xu);
        for (std::size_t yu = 0; yu < y.rep.size(); ++yu) {
            if (y.rep[yu].is_zero()) continue;
            Word yw = yws.word(yu);
            Scalar pairc = x.rep[xu] * y.rep[yu];

            // Rotate x so position i comes last: n-i steps of r.
            Word xr = xw;
            int xsgn = 1;
            for (std::size_t i = n; i-- > 0;) {
                // After n-1-i rotations the word ends at letter index i.
                // (Loop runs i = n-1 first with zero rotations applied.)
                std::size_t letter_i = xr[n - 1];
                Word yr = yw;
                int ysgn = 1;
                for (std::size_t j = 0; j < m; ++j) {
                    std::size_t letter_j = yr[0];
                    const Scalar& b = ginv.at(letter_i, letter_j);
                    if (!b.is_zero()) {
                        // Rotation signs for both inputs, and the form-degree
                        // twist on the contracted letter of the first.
                        long eps = static_cast<long>(d) * w.degrees[letter_i];
                        Scalar sgn = Scalar::in_field(
                            (parity(eps) ? -1 : 1) * xsgn * ysgn, fld);
                        Word word;
                        word.reserve(out.weight);
                        word.insert(word.end(), xr.begin(), xr.end() - 1);
                        word.insert(word.end(), yr.begin() + 1, yr.end());
                        out.rep[ows.index(word)] += sgn * b * pairc;
                    }
                    // Advance y: bring the next letter to the front.
                    std::vector<int> degs(m);
                    for (std::size_t k = 0; k < m; ++k) degs[k] = w.degrees[yr[k]];
                    ysgn *= rotation_sign(degs);
                    Word next(m);
                    next[0] = yr[m - 1];
                    for (std::size_t k = 1; k < m; ++k) next[k] = yr[k - 1];
                    yr = next;
                }
                // Advance x by one rotation.
                std::vector<int> degs(n);
                for (std::size_t k = 0; k < n; ++k) degs[k] = w.degrees[xr[k]];
                xsgn *= rotation_sign(degs);
                Word next(n);
                next[0] = xr[n - 1];
                for (std::size_t k = 1; k < n; ++k) next[k] = xr[k - 1];
                xr = next;
            }
        }
    }
    return out;
}

}  // namespace dihedra
