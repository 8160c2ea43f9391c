#pragma once

#include <nlohmann/json_fwd.hpp>

#include "dihedra/ainfty.hpp"
#include "dihedra/deform.hpp"

namespace dihedra {

// One JSON document per algebra; rationals are serialized as strings "p/q"
// and matrices as row-major nested arrays.
struct AlgebraDescription {
    FieldSpec field;
    InvolutiveSpace space;
    bool involutive = false;  // defaults: involution key present / form key present
    bool cyclic = false;
    std::size_t truncation = 5;
    int degree_lo = 0;
    int degree_hi = 5;
    std::map<std::size_t, Matrix> components;  // dual-side m
    std::string structure_mode;                // dual | dga | hat

    std::optional<NilpotentRing> ring;
    std::map<std::size_t, Derivation> eta_terms;  // monomial -> derivation (degree 1)
    std::map<std::size_t, Derivation> y_terms;    // monomial -> derivation (degree 0)

    AInftyStructure structure(std::optional<std::size_t> trunc_override = std::nullopt) const;
};

AlgebraDescription parse_description(const nlohmann::json& doc);
AlgebraDescription parse_description_text(const std::string& text);
AlgebraDescription parse_description_file(const std::string& path);

Scalar parse_scalar_json(const nlohmann::json& v, const FieldSpec& f);
Matrix parse_matrix_json(const nlohmann::json& v, const FieldSpec& f);

}  // namespace dihedra
