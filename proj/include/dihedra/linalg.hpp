#pragma once

#include <optional>
#include <vector>

#include "dihedra/matrix.hpp"

namespace dihedra {

struct Rref {
    Matrix r;                 // row-reduced echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    std::size_t rank = 0;
};

Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Exact basis of the null space; size = cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// dim( span(ambient) / (span(ambient) ∩ span(sub)) ), columns as generators.
// Equals rank([ambient | sub]) - rank(sub).
std::size_t quotient_dim(const Matrix& ambient_gens, const Matrix& sub_gens);

// Inverse of a square matrix; throws std::domain_error naming a kernel
// vector when singular.
Matrix inverse(const Matrix& m);

// Echelonized basis of a span with exact coordinate extraction.
class SubspaceBasis {
  public:
    SubspaceBasis() = default;
    // Columns of `gens` span the subspace.
    explicit SubspaceBasis(const Matrix& gens);

    std::size_t dim() const { return basis_.cols(); }
    std::size_t ambient_dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    // Coordinates of v in the basis; throws if v is outside the span.
    std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
    // Matrix form of coords on the whole ambient space (valid on the span).
    Matrix coord_map() const;

  private:
    Matrix basis_;                       // ambient_dim x dim, pivot-normalized
    std::vector<std::size_t> pivot_rows_;
};

}  // namespace dihedra
