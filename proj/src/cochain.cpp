#include "dihedra/cochain.hpp"

#include <stdexcept>

namespace dihedra {

std::size_t CochainComplex::dim(int k) const {
    auto it = blocks.find(k);
    if (it == blocks.end()) return 0;
    std::size_t d = 0;
    for (const auto& b : it->second) d += b.dim;
    return d;
}

const Matrix& CochainComplex::differential(int k) const {
    static const Matrix empty;
    auto it = diff.find(k);
    return it == diff.end() ? empty : it->second;
}

void CochainComplex::validate_d_squared() const {
    for (const auto& [k, d] : diff) {
        auto next = diff.find(k + 1);
        if (next == diff.end()) continue;
        if (!(next->second * d).is_zero())
            throw std::logic_error(label + ": d^2 != 0 at degree " + std::to_string(k));
    }
}

std::pair<std::size_t, std::size_t> CochainComplex::block_range(int k, std::size_t weight) const {
    std::size_t off = 0;
    auto it = blocks.find(k);
    if (it != blocks.end())
        for (const auto& b : it->second) {
            if (b.weight == weight) return {off, off + b.dim};
            off += b.dim;
        }
    return {off, off};
}

CochainComplex filtration_piece(const CochainComplex& c, long level) {
    long cutoff = c.kind == WeightKind::Derivation ? level : level + 1;
    CochainComplex out = c;
    out.label = c.label + "_{>=" + std::to_string(level) + "}";
    out.blocks.clear();
    out.diff.clear();

    // Per degree, the kept index set (weights >= cutoff).
    std::map<int, std::vector<std::size_t>> kept;
    for (const auto& [k, blist] : c.blocks) {
        std::size_t off = 0;
        std::vector<CochainBlock> nb;
        for (const auto& b : blist) {
            if (static_cast<long>(b.weight) >= cutoff) {
                nb.push_back(b);
                for (std::size_t i = 0; i < b.dim; ++i) kept[k].push_back(off + i);
            }
            off += b.dim;
        }
        out.blocks[k] = std::move(nb);
    }
    for (const auto& [k, d] : c.diff) {
        const auto& rows = kept[k + 1];
        const auto& cols = kept[k];
        Matrix nd(rows.size(), cols.size(), c.field);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) nd.at(i, j) = d.at(rows[i], cols[j]);
        // The differential never lowers weight, so dropping low weights on
        // both sides loses nothing; guard that claim.
        for (std::size_t r = 0; r < d.rows(); ++r) {
            bool row_kept = false;
            for (std::size_t i : rows)
                if (i == r) {
                    row_kept = true;
                    break;
                }
            if (row_kept) continue;
            for (std::size_t j : cols)
                if (!d.at(r, j).is_zero())
                    throw std::logic_error(c.label + ": filtration is not a subcomplex");
        }
        out.diff[k] = std::move(nd);
    }
    return out;
}

std::vector<CohomologyRow> cohomology_table(const CochainComplex& c, const CochainComplex* probe) {
    std::vector<CohomologyRow> rows;
    for (int k = c.report_lo; k <= c.report_hi; ++k) {
        CohomologyRow row;
        row.degree = k;
        row.cochain_dim = c.dim(k);
        std::size_t rank_out = rank(c.differential(k));
        std::size_t rank_in = rank(c.differential(k - 1));
        row.h_dim = row.cochain_dim - rank_out - rank_in;
        if (probe) {
            row.stable = c.dim(k) == probe->dim(k) && c.dim(k - 1) == probe->dim(k - 1) &&
                         c.differential(k - 1) == probe->differential(k - 1) &&
                         rank_out == rank(probe->differential(k));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dihedra
