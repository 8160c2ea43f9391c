#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dihedra/graded.hpp"
#include "dihedra/words.hpp"

namespace dihedra {

// The generator space of the tensor algebra, i.e. the letters with their
// degrees and involution. All weight-graded machinery runs on this.
struct LetterSpace {
    std::vector<int> degrees;
    std::vector<std::string> names;
    Matrix involution;
    FieldSpec field;

    std::size_t dim() const { return degrees.size(); }
    WordSpace words(std::size_t weight) const { return WordSpace{dim(), weight}; }

    // Involution matrix restricted to signed-permutation shape, if it has one.
    struct SignedPerm {
        std::vector<std::size_t> image;
        std::vector<int> sign;
    };
    std::optional<SignedPerm> involution_perm() const;
};

// Cyclic rotation on weight-w words: last letter moves to the front, with
// the Koszul sign of that move. Returns (sign, rotated word index).
std::pair<int, std::size_t> rotate_word(const LetterSpace& w, std::size_t weight, std::size_t idx);

// (w_1 ... w_n)* as a vector in the weight-n component: Koszul reversal sign
// times the reversed word with the involution applied letterwise.
std::vector<Scalar> involute_word(const LetterSpace& w, std::size_t weight, std::size_t idx);

std::vector<Scalar> involute_vector(const LetterSpace& w, std::size_t weight,
                                    const std::vector<Scalar>& v);

// Dense matrices of the generators r (rotation) and s (tensor involution)
// acting on the weight-n component.
Matrix rotation_matrix(const LetterSpace& w, std::size_t weight);
Matrix tensor_involution_matrix(const LetterSpace& w, std::size_t weight);

enum class CoinvGroup { Cyclic, DihedralPlus, DihedralMinus };

// Coinvariants of the weight-n component under the cyclic, dihedral or
// skew-dihedral action: the quotient by span{x - g x}.
struct CoinvariantSpace {
    std::size_t weight = 0;
    CoinvGroup group = CoinvGroup::Cyclic;
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    Matrix projection;  // dim x ambient_dim
    Matrix section;     // ambient_dim x dim, projection * section = id
    std::vector<std::size_t> rep_words;  // representative word per class
};

CoinvariantSpace coinvariants(const LetterSpace& w, std::size_t weight, CoinvGroup group);

}  // namespace dihedra
