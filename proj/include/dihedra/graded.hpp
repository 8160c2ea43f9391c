#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dihedra/linalg.hpp"
#include "dihedra/matrix.hpp"

namespace dihedra {

// Sign convention for the degree-d bilinear form.
enum class FormSymmetry {
    Graded,  // <x,y> = (-1)^{|x||y|} <y,x>
    Strict,  // <x,y> = <y,x>
};

struct BilinearForm {
    int degree = 0;   // <x,y> != 0 only when |x|+|y| = degree
    Matrix gram;      // gram(i,j) = <v_i, v_j>
    FormSymmetry symmetry = FormSymmetry::Graded;
};

struct GradedSpace {
    std::vector<std::string> names;
    std::vector<int> degrees;

    std::size_t dim() const { return names.size(); }
};

// Finite graded space with an involution (a degree-0 square root of the
// identity) and an optional bilinear form of pure degree.
struct InvolutiveSpace {
    GradedSpace space;
    Matrix involution;  // columns: v_j -> sum_i involution(i,j) v_i
    std::optional<BilinearForm> form;
    FieldSpec field;

    std::size_t dim() const { return space.dim(); }
    int degree(std::size_t i) const { return space.degrees[i]; }

    // Throws std::invalid_argument describing the first violated invariant.
    void validate() const;

    bool form_nondegenerate() const;
};

InvolutiveSpace make_involutive_space(std::vector<std::pair<std::string, int>> basis,
                                      std::optional<Matrix> involution = std::nullopt,
                                      std::optional<BilinearForm> form = std::nullopt,
                                      FieldSpec field = FieldSpec::rationals());

// Degree shift by the n-fold suspension (degrees drop by n); involution and
// form carry over, the form degree dropping by 2n.
InvolutiveSpace suspend(const InvolutiveSpace& v, int n);

// Dual space: negated degrees, involution -(P^T); a non-degenerate form
// dualizes to its inverse Gram matrix in the dual basis (degree -d),
// otherwise the form is dropped.
InvolutiveSpace dualize(const InvolutiveSpace& v);

// (-1)^eps for reversing w_1...w_n, eps = sum_i |w_i| * sum_{j>i} |w_j|.
int reversal_sign(const std::vector<int>& degrees);

// (-1)^eps for moving the last factor to the front, eps = |w_n| * sum_{i<n} |w_i|.
int rotation_sign(const std::vector<int>& degrees);

}  // namespace dihedra
