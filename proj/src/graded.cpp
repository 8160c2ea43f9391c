#include "dihedra/graded.hpp"

#include <set>
#include <stdexcept>

namespace dihedra {

void InvolutiveSpace::validate() const {
    std::size_t n = dim();
    if (space.degrees.size() != n) throw std::invalid_argument("basis name/degree count mismatch");
    std::set<std::string> seen(space.names.begin(), space.names.end());
    if (seen.size() != n) throw std::invalid_argument("duplicate basis names");
    if (involution.rows() != n || involution.cols() != n)
        throw std::invalid_argument("involution matrix has wrong shape");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!involution.at(i, j).is_zero() && degree(i) != degree(j))
                throw std::invalid_argument("involution does not preserve degree (entry " +
                                            space.names[i] + "," + space.names[j] + ")");

    if (!(involution * involution == Matrix::identity(n, field)))
        throw std::invalid_argument("involution does not square to the identity");

    if (form) {
        const Matrix& g = form->gram;
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("Gram matrix has wrong shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (g.at(i, j).is_zero()) continue;
                if (degree(i) + degree(j) != form->degree)
                    throw std::invalid_argument("form entry <" + space.names[i] + "," +
                                                space.names[j] + "> violates the degree-" +
                                                std::to_string(form->degree) + " constraint");
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Scalar expect = g.at(i, j);
                if (form->symmetry == FormSymmetry::Graded && (degree(i) * degree(j)) % 2 != 0)
                    expect = -expect;
                if (g.at(j, i) != expect)
                    throw std::invalid_argument("form is not " +
                                                std::string(form->symmetry == FormSymmetry::Graded
                                                                ? "graded-symmetric"
                                                                : "symmetric") +
                                                " at <" + space.names[i] + "," + space.names[j] + ">");
            }
        // <x*, y*> = <x, y>  <=>  P^T G P = G
        if (!(involution.transposed() * g * involution == g))
            throw std::invalid_argument("form is not involution-invariant");
    }
}

bool InvolutiveSpace::form_nondegenerate() const {
    if (!form) return false;
    return rank(form->gram) == dim();
}

InvolutiveSpace make_involutive_space(std::vector<std::pair<std::string, int>> basis,
                                      std::optional<Matrix> involution,
                                      std::optional<BilinearForm> form, FieldSpec field) {
    InvolutiveSpace v;
    v.field = field;
    for (auto& [name, deg] : basis) {
        v.space.names.push_back(name);
        v.space.degrees.push_back(deg);
    }
    v.involution = involution ? *involution : Matrix::identity(v.dim(), field);
    v.form = std::move(form);
    v.validate();
    return v;
}

InvolutiveSpace suspend(const InvolutiveSpace& v, int n) {
    InvolutiveSpace r = v;
    for (int& d : r.space.degrees) d -= n;
    // An odd shift turns a graded-symmetric form graded-antisymmetric, which
    // the form type cannot express; only even shifts carry the form along.
    if (r.form) {
        if (n % 2 == 0)
            r.form->degree -= 2 * n;
        else
            r.form.reset();
    }
    return r;
}

InvolutiveSpace dualize(const InvolutiveSpace& v) {
    InvolutiveSpace r;
    r.field = v.field;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        r.space.names.push_back(v.space.names[i] + "^");
        r.space.degrees.push_back(-v.degree(i));
    }
    r.involution = -(v.involution.transposed());
    if (v.form && v.form_nondegenerate()) {
        BilinearForm f;
        f.degree = -v.form->degree;
        f.gram = inverse(v.form->gram);
        f.symmetry = v.form->symmetry;
        r.form = std::move(f);
    }
    return r;
}

int reversal_sign(const std::vector<int>& degrees) {
    long eps = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t j = i + 1; j < degrees.size(); ++j) eps += degrees[i] * degrees[j];
    return (eps % 2 + 2) % 2 == 0 ? 1 : -1;
}

int rotation_sign(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("rotation_sign of an empty word");
    long eps = 0;
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i) eps += degrees[i];
    eps *= degrees.back();
    return (eps % 2 + 2) % 2 == 0 ? 1 : -1;
}

}  // namespace dihedra
