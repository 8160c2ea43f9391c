#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dihedra/scalar.hpp"

namespace dihedra {

// Dense matrix over an exact field. Row-major; vectors are columns.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f = FieldSpec::rationals())
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(std::size_t n, const FieldSpec& f = FieldSpec::rationals());
    static Matrix column(const std::vector<Scalar>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;

    Matrix transposed() const;

    std::vector<Scalar> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<Scalar>& v);
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M*v

    // Columns of `right` appended to the columns of *this.
    Matrix hcat(const Matrix& right) const;

    std::string str() const;  // for diagnostics/tests

  private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

std::vector<Scalar> operator+(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> operator-(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> operator*(const Scalar& s, const std::vector<Scalar>& v);
bool is_zero(const std::vector<Scalar>& v);

}  // namespace dihedra
