#include "dihedra/linalg.hpp"

#include <stdexcept>

namespace dihedra {

Rref rref(const Matrix& m) {
    Rref out;
    out.r = m;
    Matrix& a = out.r;
    std::size_t rows = a.rows(), cols = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < cols; ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    Rref rr = rref(m);
    const FieldSpec& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> out;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (std::size_t r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = -rr.r.at(r, free_col);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t quotient_dim(const Matrix& ambient_gens, const Matrix& sub_gens) {
    if (ambient_gens.rows() != sub_gens.rows())
        throw std::invalid_argument("quotient_dim: generators live in different spaces");
    return rank(ambient_gens.hcat(sub_gens)) - rank(sub_gens);
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    Rref rr = rref(m.hcat(Matrix::identity(n, m.field())));
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= rr.pivots.size() || rr.pivots[i] != i) {
            auto ker = kernel_basis(m);
            std::string w = "singular matrix";
            if (!ker.empty()) {
                w += "; kernel vector (";
                for (std::size_t j = 0; j < ker[0].size(); ++j)
                    w += (j ? ", " : "") + ker[0][j].str();
                w += ")";
            }
            throw std::domain_error(w);
        }
    }
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

SubspaceBasis::SubspaceBasis(const Matrix& gens) {
    // Echelonize the row space of gens^T; basis vectors come back as columns
    // with unit pivot rows, so coordinates can be read off pivot entries.
    Rref rr = rref(gens.transposed());
    std::size_t dim = rr.rank, amb = gens.rows();
    basis_ = Matrix(amb, dim, gens.field());
    pivot_rows_.assign(rr.pivots.begin(), rr.pivots.end());
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < amb; ++i) basis_.at(i, k) = rr.r.at(k, i);
}

bool SubspaceBasis::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Scalar> rem = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        Scalar c = rem[pivot_rows_[k]];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= c * basis_.at(i, k);
    }
    return is_zero(rem);
}

std::vector<Scalar> SubspaceBasis::coords(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Scalar> c(dim(), Scalar::zero(basis_.field()));
    std::vector<Scalar> rem = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        c[k] = rem[pivot_rows_[k]];
        if (c[k].is_zero()) continue;
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= c[k] * basis_.at(i, k);
    }
    if (!is_zero(rem)) throw std::domain_error("vector outside subspace");
    return c;
}

Matrix SubspaceBasis::coord_map() const {
    Matrix m(dim(), ambient_dim(), basis_.field());
    // Row k extracts the pivot-row coordinate; since the basis is in reduced
    // echelon form each pivot row meets exactly one basis column.
    for (std::size_t k = 0; k < dim(); ++k) m.at(k, pivot_rows_[k]) = Scalar::one(basis_.field());
    return m;
}

}  // namespace dihedra
