#pragma once

#include <map>

#include "dihedra/linalg.hpp"

namespace dihedra {

// Weight semantics of a complex: derivation complexes filter directly by
// component weight (piece >= n keeps weights >= n), coinvariant complexes
// shift by one (piece >= n keeps tensor weights >= n+1).
enum class WeightKind { Derivation, Tensor };

struct CochainBlock {
    std::size_t weight = 0;
    std::size_t dim = 0;
};

// Exact finite cochain complex assembled degreewise from weight blocks.
// Differentials are stored for lo..hi-1 where [lo, hi] is the assembled
// window (one degree wider than the requested one on each side).
struct CochainComplex {
    std::string label;
    WeightKind kind = WeightKind::Derivation;
    std::size_t trunc = 0;
    int lo = 0, hi = 0;              // assembled degrees
    int report_lo = 0, report_hi = 0;
    std::map<int, std::vector<CochainBlock>> blocks;
    std::map<int, Matrix> diff;  // diff[k]: C^k -> C^{k+1}
    FieldSpec field;

    std::size_t dim(int k) const;
    const Matrix& differential(int k) const;  // zero matrix when absent
    void validate_d_squared() const;

    // Index range [begin, end) of the given weight block within degree k.
    std::pair<std::size_t, std::size_t> block_range(int k, std::size_t weight) const;
};

// Subcomplex of weights >= the level cutoff (kind-dependent, see WeightKind).
CochainComplex filtration_piece(const CochainComplex& c, long level);

struct CohomologyRow {
    int degree = 0;
    std::size_t cochain_dim = 0;
    std::size_t h_dim = 0;
    bool stable = false;
};

// Per-degree cohomology dimensions over the reporting window. When a probe
// complex built at truncation N+1 is supplied, a degree is flagged stable if
// the adjacent cochain spaces, the incoming differential, and the rank of
// the outgoing differential are unchanged by the deeper truncation (which
// forces the reported value to agree with the N+1 computation).
std::vector<CohomologyRow> cohomology_table(const CochainComplex& c,
                                            const CochainComplex* probe = nullptr);

}  // namespace dihedra
