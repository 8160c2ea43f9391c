#include "dihedra/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dihedra {

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
    FieldSpec f = v.empty() ? FieldSpec::rationals() : v[0].field();
    Matrix m(v.size(), 1, f);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const Scalar& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (!same_shape(o)) throw std::invalid_argument("matrix shape mismatch in +");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (!same_shape(o)) throw std::invalid_argument("matrix shape mismatch in -");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix r = *this;
    for (Scalar& x : r.a_) x *= s;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (Scalar& x : r.a_) x = -x;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!same_shape(o)) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
    std::vector<Scalar> v(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const std::vector<Scalar>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::hcat(const Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("row mismatch in hcat");
    Matrix r(rows_, cols_ + right.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
    }
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

std::vector<Scalar> operator+(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    std::vector<Scalar> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<Scalar> operator-(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    std::vector<Scalar> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

std::vector<Scalar> operator*(const Scalar& s, const std::vector<Scalar>& v) {
    std::vector<Scalar> r = v;
    for (Scalar& x : r) x *= s;
    return r;
}

bool is_zero(const std::vector<Scalar>& v) {
    for (const Scalar& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace dihedra
