#include "dihedra/deform.hpp"

#include <stdexcept>

namespace dihedra {

Flavor parse_flavor(const std::string& s) {
    if (s == "plain") return Flavor::Plain;
    if (s == "inv") return Flavor::Involutive;
    if (s == "cyc") return Flavor::Cyclic;
    if (s == "cycinv") return Flavor::CyclicInvolutive;
    throw std::invalid_argument("unknown flavor \"" + s + "\" (plain|inv|cyc|cycinv)");
}

std::string flavor_str(Flavor f) {
    switch (f) {
        case Flavor::Plain: return "plain";
        case Flavor::Involutive: return "inv";
        case Flavor::Cyclic: return "cyc";
        case Flavor::CyclicInvolutive: return "cycinv";
    }
    return "?";
}

bool RDerivation::is_zero() const {
    for (const auto& [mono, d] : terms)
        if (!d.is_zero()) return false;
    return true;
}

bool RDerivation::augmentation_supported() const {
    auto it = terms.find(0);
    return it == terms.end() || it->second.is_zero();
}

RDerivation RDerivation::operator+(const RDerivation& o) const {
    if (!(ring == o.ring) || degree != o.degree)
        throw std::invalid_argument("RDerivation ring/degree mismatch");
    RDerivation r = *this;
    for (const auto& [mono, d] : o.terms) {
        auto it = r.terms.find(mono);
        if (it == r.terms.end())
            r.terms[mono] = d;
        else
            it->second = it->second + d;
    }
    return r;
}

RDerivation RDerivation::operator-(const RDerivation& o) const {
    return *this + o.scaled(Scalar(-1));
}

RDerivation RDerivation::scaled(const Scalar& c) const {
    RDerivation r = *this;
    for (auto& [mono, d] : r.terms) d = d.scaled(c);
    return r;
}

RDerivation make_rderivation(const NilpotentRing& ring, int degree,
                             std::map<std::size_t, Derivation> terms) {
    RDerivation r;
    r.ring = ring;
    r.degree = degree;
    r.terms = std::move(terms);
    return r;
}

RDerivation r_bracket(const LetterSpace& w, const RDerivation& a, const RDerivation& b) {
    if (!(a.ring == b.ring)) throw std::invalid_argument("bracket over different rings");
    RDerivation out;
    out.ring = a.ring;
    out.degree = a.degree + b.degree;
    for (const auto& [ma, da] : a.terms)
        for (const auto& [mb, db] : b.terms) {
            long m = a.ring.mono_mul(ma, mb);
            if (m < 0) continue;
            Derivation br = commutator(w, da, db);
            if (br.is_zero()) continue;
            auto it = out.terms.find(static_cast<std::size_t>(m));
            if (it == out.terms.end())
                out.terms[static_cast<std::size_t>(m)] = br;
            else
                it->second = it->second + br;
        }
    return out;
}

RDerivation r_bracket_base(const LetterSpace& w, const Derivation& m, const RDerivation& a) {
    RDerivation out;
    out.ring = a.ring;
    out.degree = m.degree + a.degree;
    for (const auto& [mono, d] : a.terms) {
        Derivation br = commutator(w, m, d);
        if (!br.is_zero()) out.terms[mono] = br;
    }
    return out;
}

bool in_flavor(const AInftyStructure& s, const Derivation& xi, Flavor flavor) {
    xi.validate_homogeneous(s.letters);
    if (!xi.comp[0].is_zero()) return false;
    if (flavor == Flavor::Involutive || flavor == Flavor::CyclicInvolutive) {
        Derivation star = derivation_involution(s.letters, xi);
        if (!(star - xi).is_zero()) return false;
    }
    if (flavor == Flavor::Cyclic || flavor == Flavor::CyclicInvolutive) {
        if (!s.base.form) throw std::invalid_argument("cyclic flavor requires a bilinear form");
        for (std::size_t n = 1; n <= s.trunc; ++n) {
            if (xi.comp[n].is_zero()) continue;
            auto elems = hom_block_basis(s, n, xi.degree);
            std::vector<Scalar> coords(elems.size(), Scalar::zero(s.letters.field));
            for (std::size_t i = 0; i < elems.size(); ++i)
                coords[i] = xi.comp[n].at(elems[i].first, elems[i].second);
            Matrix cond = cyclic_condition_rows(s, n, xi.degree, elems);
            if (!is_zero(cond.apply(coords))) return false;
        }
    }
    return true;
}

bool in_flavor(const AInftyStructure& s, const RDerivation& xi, Flavor flavor) {
    for (const auto& [mono, d] : xi.terms)
        if (!in_flavor(s, d, flavor)) return false;
    return true;
}

McVerdict mc_check(const AInftyStructure& s, const RDerivation& eta, Flavor flavor) {
    if (eta.degree != 1) throw std::invalid_argument("Maurer-Cartan elements have degree 1");
    if (!eta.augmentation_supported())
        throw std::invalid_argument("deformation element has a constant term");
    if (!in_flavor(s, eta, flavor))
        throw std::invalid_argument("deformation element leaves the " + flavor_str(flavor) +
                                    " subalgebra");
    const FieldSpec& f = s.letters.field;
    Scalar half = Scalar::one(f) / Scalar::in_field(2, f);
    RDerivation res = r_bracket_base(s.letters, s.m, eta) +
                      r_bracket(s.letters, eta, eta).scaled(half);
    McVerdict v;
    for (const auto& [mono, d] : res.terms) {
        for (std::size_t n = 0; n <= s.trunc; ++n)
            if (!d.comp[n].is_zero()) {
                v.ok = false;
                v.witnesses.push_back("curvature at monomial " + eta.ring.monomial_str(mono) +
                                      ", weight " + std::to_string(n));
            }
    }
    return v;
}

std::size_t algebra_dim(const AInftyStructure& s) {
    std::size_t d = 0;
    for (std::size_t w = 0; w <= s.trunc; ++w) d += s.letters.words(w).size();
    return d;
}

std::vector<std::size_t> weight_offsets(const AInftyStructure& s) {
    std::vector<std::size_t> off(s.trunc + 2, 0);
    for (std::size_t w = 0; w <= s.trunc; ++w)
        off[w + 1] = off[w] + s.letters.words(w).size();
    return off;
}

Matrix derivation_operator(const AInftyStructure& s, const Derivation& xi) {
    std::vector<std::size_t> off = weight_offsets(s);
    std::size_t dim = algebra_dim(s);
    Matrix op(dim, dim, s.letters.field);
    for (std::size_t w = 0; w <= s.trunc; ++w) {
        WordSpace ws = s.letters.words(w);
        for (std::size_t u = 0; u < ws.size(); ++u) {
            MixedElement img = apply_to_word(s.letters, xi, w, u);
            for (auto& [tw, vec] : img)
                for (std::size_t k = 0; k < vec.size(); ++k)
                    if (!vec[k].is_zero()) op.at(off[tw] + k, off[w] + u) += vec[k];
        }
    }
    return op;
}

TruncOperator derivation_operator(const AInftyStructure& s, const RDerivation& xi) {
    TruncOperator op;
    op.ring = xi.ring;
    op.dim = algebra_dim(s);
    for (const auto& [mono, d] : xi.terms) {
        Matrix m = derivation_operator(s, d);
        if (!m.is_zero()) op.terms[mono] = std::move(m);
    }
    return op;
}

bool TruncOperator::reduction_is_identity() const {
    auto it = terms.find(0);
    if (it == terms.end()) return false;
    return it->second == Matrix::identity(dim, it->second.field());
}

TruncOperator compose(const AInftyStructure&, const TruncOperator& a, const TruncOperator& b) {
    if (!(a.ring == b.ring)) throw std::invalid_argument("operator rings differ");
    TruncOperator out;
    out.ring = a.ring;
    out.dim = a.dim;
    for (const auto& [ma, mat_a] : a.terms)
        for (const auto& [mb, mat_b] : b.terms) {
            long m = a.ring.mono_mul(ma, mb);
            if (m < 0) continue;
            Matrix prod = mat_a * mat_b;
            if (prod.is_zero()) continue;
            auto it = out.terms.find(static_cast<std::size_t>(m));
            if (it == out.terms.end())
                out.terms[static_cast<std::size_t>(m)] = std::move(prod);
            else
                it->second = it->second + prod;
        }
    return out;
}

namespace {

TruncOperator identity_operator(const AInftyStructure& s, const NilpotentRing& ring) {
    TruncOperator op;
    op.ring = ring;
    op.dim = algebra_dim(s);
    op.terms[0] = Matrix::identity(op.dim, s.letters.field);
    return op;
}

TruncOperator add(const TruncOperator& a, const TruncOperator& b, const Scalar& factor) {
    TruncOperator out = a;
    for (const auto& [mono, m] : b.terms) {
        Matrix scaled = m * factor;
        auto it = out.terms.find(mono);
        if (it == out.terms.end())
            out.terms[mono] = std::move(scaled);
        else
            it->second = it->second + scaled;
    }
    return out;
}

bool op_is_zero(const TruncOperator& op) {
    for (const auto& [mono, m] : op.terms)
        if (!m.is_zero()) return false;
    return true;
}

}  // namespace

TruncOperator exp_operator(const AInftyStructure& s, const RDerivation& y) {
    if (!y.augmentation_supported())
        throw std::invalid_argument("exp needs coefficients in the augmentation ideal");
    for (const auto& [mono, d] : y.terms)
        if (!d.comp[0].is_zero())
            throw std::invalid_argument("exp needs derivations of the augmentation subalgebra");
    const FieldSpec& f = s.letters.field;
    TruncOperator ly = derivation_operator(s, y);
    TruncOperator acc = identity_operator(s, y.ring);
    TruncOperator power = ly;
    Scalar fact = Scalar::one(f);
    for (std::size_t k = 1; !op_is_zero(power); ++k) {
        fact *= Scalar::in_field(static_cast<long>(k), f);
        acc = add(acc, power, Scalar::one(f) / fact);
        power = compose(s, power, ly);
    }
    return acc;
}

RDerivation log_operator(const AInftyStructure& s, const TruncOperator& phi, int degree) {
    if (!phi.reduction_is_identity())
        throw std::invalid_argument("log is defined only for automorphisms reducing to the identity");
    const FieldSpec& f = s.letters.field;
    TruncOperator z = phi;
    z.terms[0] = z.terms[0] - Matrix::identity(phi.dim, f);
    if (z.terms[0].is_zero()) z.terms.erase(0);

    TruncOperator acc;
    acc.ring = phi.ring;
    acc.dim = phi.dim;
    TruncOperator power = z;
    for (std::size_t k = 1; !op_is_zero(power); ++k) {
        Scalar coeff = Scalar::in_field(k % 2 == 1 ? 1 : -1, f) /
                       Scalar::in_field(static_cast<long>(k), f);
        acc = add(acc, power, coeff);
        power = compose(s, power, z);
    }

    // Read derivation components off the generator columns.
    std::vector<std::size_t> off = weight_offsets(s);
    RDerivation out;
    out.ring = phi.ring;
    out.degree = degree;
    for (const auto& [mono, mat] : acc.terms) {
        Derivation d = Derivation::zero(s.letters, degree, s.trunc);
        for (std::size_t j = 0; j < s.letters.dim(); ++j)
            for (std::size_t n = 0; n <= s.trunc; ++n) {
                WordSpace ws = s.letters.words(n);
                for (std::size_t u = 0; u < ws.size(); ++u)
                    d.comp[n].at(u, j) = mat.at(off[n] + u, off[1] + j);
            }
        if (!d.is_zero()) out.terms[mono] = d;
    }
    // Certify the operator really is the Leibniz extension of what we read.
    TruncOperator back = derivation_operator(s, out);
    TruncOperator diff = add(back, acc, Scalar(-1));
    if (!op_is_zero(diff)) throw std::logic_error("log of operator is not a derivation");
    return out;
}

RDerivation bch(const AInftyStructure& s, const RDerivation& x, const RDerivation& y) {
    if (x.degree != 0 || y.degree != 0)
        throw std::invalid_argument("BCH is defined on degree-0 elements");
    TruncOperator prod = compose(s, exp_operator(s, x), exp_operator(s, y));
    RDerivation out = log_operator(s, prod, 0);
    // e^x e^y = e^{x • y} by construction; guard it anyway.
    TruncOperator check = add(exp_operator(s, out), prod, Scalar(-1));
    if (!op_is_zero(check)) throw std::logic_error("BCH product failed its defining identity");
    return out;
}

RDerivation gauge_action(const AInftyStructure& s, const RDerivation& y, const RDerivation& xi,
                         Flavor flavor) {
    if (y.degree != 0) throw std::invalid_argument("gauge elements have degree 0");
    if (!in_flavor(s, y, flavor))
        throw std::invalid_argument("gauge element leaves the " + flavor_str(flavor) +
                                    " subalgebra");
    McVerdict pre = mc_check(s, xi, flavor);
    if (!pre.ok) throw std::invalid_argument("gauge action applied to a non-Maurer-Cartan element");

    const FieldSpec& f = s.letters.field;
    RDerivation dy = r_bracket_base(s.letters, s.m, y);
    RDerivation term = r_bracket(s.letters, y, xi) - dy;  // ad_y xi - dy
    RDerivation out = xi;
    Scalar fact = Scalar::one(f);
    for (std::size_t n = 1; !term.is_zero(); ++n) {
        fact *= Scalar::in_field(static_cast<long>(n), f);
        out = out + term.scaled(Scalar::one(f) / fact);
        term = r_bracket(s.letters, y, term);
    }
    McVerdict post = mc_check(s, out, flavor);
    if (!post.ok) throw std::logic_error("gauge action broke the Maurer-Cartan equation");
    return out;
}

AInftyStructure reduction(const RStructure& s) { return *s.base; }

namespace {

// Flavored basis of the degree-h derivations supported in weights 1..N,
// as columns in the flat ambient coordinates of those blocks.
struct FlavoredBasis {
    std::vector<std::size_t> offset;  // per weight (1..N), into ambient
    std::size_t ambient = 0;
    Matrix basis;  // ambient x dim
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> elems;
};

FlavoredBasis flavored_basis(const AInftyStructure& s, int h, Flavor flavor) {
    const FieldSpec& f = s.letters.field;
    Scalar half = Scalar::one(f) / Scalar::in_field(2, f);
    FlavoredBasis fb;
    fb.elems.resize(s.trunc + 1);
    fb.offset.resize(s.trunc + 1, 0);
    for (std::size_t n = 1; n <= s.trunc; ++n) {
        fb.offset[n] = fb.ambient;
        fb.elems[n] = hom_block_basis(s, n, h);
        fb.ambient += fb.elems[n].size();
    }

    std::vector<std::vector<Scalar>> cols;
    for (std::size_t n = 1; n <= s.trunc; ++n) {
        const auto& elems = fb.elems[n];
        if (elems.empty()) continue;
        // Block basis columns (in block coordinates).
        Matrix block;
        bool cyclic_part = flavor == Flavor::Cyclic || flavor == Flavor::CyclicInvolutive;
        if (cyclic_part) {
            Matrix cond = cyclic_condition_rows(s, n, h, elems);
            auto ker = kernel_basis(cond);
            block = Matrix(elems.size(), ker.size(), f);
            for (std::size_t c = 0; c < ker.size(); ++c) block.set_col(c, ker[c]);
        } else {
            block = Matrix::identity(elems.size(), f);
        }
        if (flavor == Flavor::Involutive || flavor == Flavor::CyclicInvolutive) {
            // Project onto the +1 eigenspace of the derivation involution.
            Matrix t(elems.size(), elems.size(), f);
            for (std::size_t c = 0; c < elems.size(); ++c) {
                auto [u, j] = elems[c];
                std::vector<Scalar> su = involute_word(s.letters, n, u);
                for (std::size_t jp = 0; jp < s.letters.dim(); ++jp) {
                    const Scalar& p = s.letters.involution.at(j, jp);
                    if (p.is_zero()) continue;
                    for (std::size_t i = 0; i < elems.size(); ++i)
                        if (elems[i].second == jp && !su[elems[i].first].is_zero())
                            t.at(i, c) += p * su[elems[i].first];
                }
            }
            Matrix proj(elems.size(), block.cols(), f);
            for (std::size_t c = 0; c < block.cols(); ++c) {
                std::vector<Scalar> b = block.col(c);
                proj.set_col(c, half * (b + t.apply(b)));
            }
            block = SubspaceBasis(proj).basis();
        } else {
            block = SubspaceBasis(block).basis();
        }
        for (std::size_t c = 0; c < block.cols(); ++c) {
            std::vector<Scalar> v(fb.ambient, Scalar::zero(f));
            for (std::size_t r = 0; r < block.rows(); ++r) v[fb.offset[n] + r] = block.at(r, c);
            cols.push_back(std::move(v));
        }
    }
    fb.basis = Matrix(fb.ambient, cols.size(), f);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < fb.ambient; ++r) fb.basis.at(r, c) = cols[c][r];
    }
    return fb;
}

// [m, -] from the degree-h ambient coordinates into the degree-(h+1) ones.
Matrix bracket_matrix(const AInftyStructure& s, const FlavoredBasis& src,
                      const FlavoredBasis& dst, int h) {
    const FieldSpec& f = s.letters.field;
    Matrix d(dst.ambient, src.ambient, f);
    for (std::size_t n = 1; n <= s.trunc; ++n)
        for (std::size_t i = 0; i < src.elems[n].size(); ++i) {
            auto [u, j] = src.elems[n][i];
            Derivation e = Derivation::zero(s.letters, h, s.trunc);
            e.comp[n].at(u, j) = Scalar::one(f);
            Derivation de = commutator(s.letters, s.m, e);
            for (std::size_t np = 1; np <= s.trunc; ++np)
                for (std::size_t k = 0; k < dst.elems[np].size(); ++k) {
                    auto [up, jp] = dst.elems[np][k];
                    const Scalar& c = de.comp[np].at(up, jp);
                    if (!c.is_zero()) d.at(dst.offset[np] + k, src.offset[n] + i) = c;
                }
        }
    return d;
}

}  // namespace

std::size_t infinitesimal_moduli(const AInftyStructure& s, Flavor flavor) {
    if ((flavor == Flavor::Involutive || flavor == Flavor::CyclicInvolutive) && !s.involutive)
        throw std::invalid_argument("structure is not involutive");
    if ((flavor == Flavor::Cyclic || flavor == Flavor::CyclicInvolutive) && !s.cyclic)
        throw std::invalid_argument("structure is not cyclic");
    FlavoredBasis b0 = flavored_basis(s, 0, flavor);
    FlavoredBasis b1 = flavored_basis(s, 1, flavor);
    FlavoredBasis b2 = flavored_basis(s, 2, flavor);
    Matrix d1 = bracket_matrix(s, b1, b2, 1);
    Matrix d0 = bracket_matrix(s, b0, b1, 0);
    std::size_t cocycles = b1.basis.cols() - rank(d1 * b1.basis);
    std::size_t exact = rank(d0 * b0.basis);
    return cocycles - exact;
}

std::size_t moduli_via_cohomology(const AInftyStructure& s, Flavor flavor) {
    auto h_at = [](const CochainComplex& c, int k) {
        CochainComplex piece = filtration_piece(c, 1);
        for (const auto& row : cohomology_table(piece))
            if (row.degree == k) return row.h_dim;
        throw std::logic_error("degree missing from cohomology table");
    };
    // Derivations of weight w correspond to coinvariants of weight w+1, so
    // the coinvariant complexes must be assembled one weight deeper than
    // the structure truncation for the two routes to cover the same data.
    auto widened = [&s]() {
        std::map<std::size_t, Matrix> comps;
        for (std::size_t n = 1; n <= s.trunc; ++n)
            if (!s.m.comp[n].is_zero()) comps[n] = s.m.comp[n];
        return make_structure(s.base, s.trunc + 1, comps, s.involutive, s.cyclic);
    };
    switch (flavor) {
        case Flavor::Plain:
            return h_at(hochschild_complex(s, 2, 2), 2);
        case Flavor::Involutive:
            return h_at(hochschild_pm_complexes(s, 2, 2).first, 2);
        case Flavor::Cyclic: {
            if (!s.base.form_nondegenerate())
                throw std::invalid_argument("cyclic moduli comparison needs a non-degenerate form");
            int k = 2 - s.base.form->degree;
            return h_at(cyclic_complex(widened(), k, k), k);
        }
        case Flavor::CyclicInvolutive: {
            if (!s.base.form_nondegenerate())
                throw std::invalid_argument("cyclic moduli comparison needs a non-degenerate form");
            int k = 2 - s.base.form->degree;
            return h_at(dihedral_complexes(widened(), k, k).first, k);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace dihedra
