// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from independent hand and brute-force
// computations; randomized checks are deterministic in their seeds.

#include <functional>
#include <iostream>

#include "dihedra/deform.hpp"
#include "support/oracles.hpp"
#include "support/random_structures.hpp"

using namespace dihedra;
using namespace dihedra::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label << note
              << std::endl;
    if (!ok) ++failures;
}

// ---- 1: group relations of the dihedral and skew-dihedral actions --------

bool sign_engine() {
    std::mt19937_64 rng(1001);
    for (int it = 0; it < 8; ++it) {
        InvolutiveSpace v = random_involutive_space(rng, 3);
        LetterSpace w = letter_space(v);
        for (std::size_t n = 1; n <= 6; ++n) {
            WordSpace ws = w.words(n);
            for (std::size_t u = 0; u < ws.size(); ++u) {
                // r^n = id on basis vectors
                std::pair<int, std::size_t> cur{1, u};
                for (std::size_t k = 0; k < n; ++k) {
                    auto [sg, img] = rotate_word(w, n, cur.second);
                    cur = {cur.first * sg, img};
                }
                if (cur != std::pair<int, std::size_t>{1, u}) return false;

                // s^2 = id and s r s = r^{-1}, for both sign conventions;
                // the overall sign of s cancels in both relations, so they
                // hold for the dihedral and skew-dihedral action together.
                std::vector<Scalar> e(ws.size(), Scalar::zero(w.field));
                e[u] = Scalar::one(w.field);
                std::vector<Scalar> ss = involute_vector(w, n, involute_word(w, n, u));
                if (!(ss == e)) return false;

                // srs(e_u) vs r^{-1}(e_u) = r^{n-1}(e_u)
                std::vector<Scalar> se = involute_word(w, n, u);
                std::vector<Scalar> rse(ws.size(), Scalar::zero(w.field));
                for (std::size_t x = 0; x < ws.size(); ++x) {
                    if (se[x].is_zero()) continue;
                    auto [sg, img] = rotate_word(w, n, x);
                    rse[img] += Scalar::in_field(sg, w.field) * se[x];
                }
                std::vector<Scalar> srse = involute_vector(w, n, rse);
                std::pair<int, std::size_t> inv{1, u};
                for (std::size_t k = 0; k + 1 < n; ++k) {
                    auto [sg, img] = rotate_word(w, n, inv.second);
                    inv = {inv.first * sg, img};
                }
                std::vector<Scalar> rinv(ws.size(), Scalar::zero(w.field));
                rinv[inv.second] = Scalar::in_field(inv.first, w.field);
                if (!(srse == rinv)) return false;
            }
        }
    }
    return true;
}

// ---- 2: import validation and perturbation rejection ---------------------

bool validation_and_perturbations() {
    std::mt19937_64 rng(1002);
    for (AInftyStructure base : {dual_numbers(4), ground_field(5)}) {
        if (!check_square_zero(base).ok || !check_involutive(base).ok ||
            !check_cyclic(base).ok)
            return false;

        int rejected = 0, guard = 0;
        while (rejected < 20 && ++guard < 400) {
            std::size_t n = static_cast<std::size_t>(rand_int(rng, 1, base.trunc));
            std::size_t u = static_cast<std::size_t>(
                rand_int(rng, 0, static_cast<long>(base.letters.words(n).size()) - 1));
            std::size_t j = static_cast<std::size_t>(rand_int(rng, 0, base.base.dim() - 1));
            Scalar c = rand_scalar(rng, 1, 3);

            std::map<std::size_t, Matrix> comps;
            for (std::size_t k = 1; k <= base.trunc; ++k)
                if (!base.m.comp[k].is_zero()) comps[k] = base.m.comp[k];
            Matrix& target = comps.try_emplace(n, Matrix(base.letters.words(n).size(),
                                                         base.base.dim(), base.base.field))
                                 .first->second;
            target.at(u, j) += c;

            try {
                AInftyStructure mod =
                    make_structure(base.base, base.trunc, comps, true, true);
                DgaTable t = table_of(mod);
                bool valid = oracle_associative(t) && oracle_dga_involutive(t) &&
                             oracle_dga_cyclic(t);
                CheckReport sq = check_square_zero(mod);
                CheckReport inv = check_involutive(mod);
                CheckReport cyc = check_cyclic(mod);
                bool ours = sq.ok && inv.ok && cyc.ok;
                if (ours != valid) return false;  // checks must match the oracle
                if (valid) continue;              // rare neighbor that stays valid
                bool witnessed = false;
                for (const CheckReport* r : {&sq, &inv, &cyc})
                    for (const auto& i : r->issues)
                        if (i.weight > 0) witnessed = true;
                if (!witnessed) return false;
                ++rejected;
            } catch (const std::invalid_argument& e) {
                // inhomogeneous entry: rejected at construction, the message
                // names the offending weight
                if (std::string(e.what()).find("weight " + std::to_string(n)) ==
                    std::string::npos)
                    return false;
                ++rejected;
            }
        }
        if (rejected < 20) return false;
    }
    return true;
}

// ---- 3/4: decomposition theorems on random involutive structures ---------

bool hochschild_decomposition() {
    std::mt19937_64 rng(1003);
    for (int it = 0; it < 50; ++it) {
        AInftyStructure s = random_structure(rng, true, false, 4);
        CochainComplex full = hochschild_complex(s, 0, 3);
        auto [plus, minus] = hochschild_pm_complexes(s, 0, 3);
        auto fr = cohomology_table(full);
        auto pr = cohomology_table(plus);
        auto mr = cohomology_table(minus);
        for (std::size_t i = 0; i < fr.size(); ++i)
            if (fr[i].h_dim != pr[i].h_dim + mr[i].h_dim) return false;
    }
    return true;
}

bool cyclic_decomposition() {
    std::mt19937_64 rng(1004);
    for (int it = 0; it < 50; ++it) {
        AInftyStructure s = random_structure(rng, true, false, 4);
        CochainComplex full = cyclic_complex(s, 0, 3);
        auto [dp, dm] = dihedral_complexes(s, 0, 3);
        auto fr = cohomology_table(full);
        auto pr = cohomology_table(dp);
        auto mr = cohomology_table(dm);
        for (std::size_t i = 0; i < fr.size(); ++i)
            if (fr[i].h_dim != pr[i].h_dim + mr[i].h_dim) return false;
    }
    return true;
}

// ---- 5: frozen dimension oracles ------------------------------------------

bool derived_dimensions() {
    // ground field, N = 5: HC = 1,0,1,0,1 in degrees 0..4 with the dihedral
    // split alternating with period 4
    AInftyStructure g = ground_field(5);
    auto hc = cohomology_table(cyclic_complex(g, 0, 4));
    std::vector<std::size_t> expect{1, 0, 1, 0, 1};
    for (std::size_t i = 0; i < expect.size(); ++i)
        if (hc[i].h_dim != expect[i]) return false;
    auto [dp, dm] = dihedral_complexes(g, 0, 4);
    auto p = cohomology_table(dp), m = cohomology_table(dm);
    if (!(m[0].h_dim == 1 && p[0].h_dim == 0)) return false;
    if (!(p[2].h_dim == 1 && m[2].h_dim == 0)) return false;
    if (!(m[4].h_dim == 1 && p[4].h_dim == 0)) return false;

    // dual numbers: HH^0 = 2, HH^1 = 1
    AInftyStructure d = dual_numbers(4);
    auto hh = cohomology_table(hochschild_complex(d, 0, 1));
    if (!(hh[0].h_dim == 2 && hh[1].h_dim == 1)) return false;

    // zero structure on a line: HH_+ supported in degrees 1,2 mod 4
    AInftyStructure z = zero_line(5);
    auto [zp, zm] = hochschild_pm_complexes(z, 0, 5);
    auto zpr = cohomology_table(zp), zmr = cohomology_table(zm);
    for (int k = 0; k <= 5; ++k) {
        bool in_plus = (k % 4 == 1) || (k % 4 == 2);
        if (zpr[k].h_dim != (in_plus ? 1u : 0u)) return false;
        if (zmr[k].h_dim != (in_plus ? 0u : 1u)) return false;
    }
    return true;
}

// ---- 6: the chain isomorphism ---------------------------------------------

bool chain_isomorphism() {
    std::mt19937_64 rng(1006);
    int tested = 0;
    while (tested < 20) {
        AInftyStructure s = random_structure(rng, true, true, 4);
        if (!s.base.form_nondegenerate()) continue;
        // exercise both the cyclic and cyclic involutive readings
        IsoReport rep = cc_der_isomorphism(s);
        if (!rep.ok || !rep.chain_ok || !rep.pm_ok) return false;
        for (const auto& row : rep.rows)
            if (!row.bijective || !row.plus_minus_match) return false;
        AInftyStructure plain = s;
        plain.involutive = false;
        IsoReport rep2 = cc_der_isomorphism(plain);
        if (!rep2.ok || !rep2.chain_ok) return false;
        ++tested;
    }
    return true;
}

// ---- 7: bracket transport --------------------------------------------------

bool bracket_consistency() {
    std::mt19937_64 rng(1007);
    int compared = 0;
    for (int it = 0; it < 10; ++it) {
        AInftyStructure s = random_structure(rng, true, true, 4);
        if (!s.base.form_nondegenerate()) continue;
        std::size_t N = s.trunc;
        std::vector<SubspaceBasis> cyc(N);
        std::vector<Matrix> fm(N);
        std::vector<CoinvariantSpace> ci(N + 1);
        for (std::size_t n = 0; n < N; ++n) {
            cyc[n] = cyclic_derivation_block(s, n);
            fm[n] = cc_der_map(s, n);
        }
        for (std::size_t i = 1; i <= N; ++i)
            ci[i] = coinvariants(s.letters, i, CoinvGroup::Cyclic);

        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = 0; q < N; ++q) {
                if (p + q < 1 || p + q > N - 1) continue;
                if (cyc[p].dim() == 0 || cyc[q].dim() == 0) continue;
                std::size_t b1 = static_cast<std::size_t>(
                    rand_int(rng, 0, static_cast<long>(cyc[p].dim()) - 1));
                std::size_t b2 = static_cast<std::size_t>(
                    rand_int(rng, 0, static_cast<long>(cyc[q].dim()) - 1));
                std::vector<Scalar> a1 = cyc[p].basis().col(b1);
                std::vector<Scalar> a2 = cyc[q].basis().col(b2);

                auto to_der = [&](const std::vector<Scalar>& amb, std::size_t n) {
                    WordSpace ws = s.letters.words(n);
                    int h = 0;
                    for (std::size_t j = 0; j < s.letters.dim(); ++j)
                        for (std::size_t u = 0; u < ws.size(); ++u)
                            if (!amb[j * ws.size() + u].is_zero())
                                h = word_degree(ws.word(u), s.letters.degrees) -
                                    s.letters.degrees[j];
                    Derivation d = Derivation::zero(s.letters, h, s.trunc);
                    for (std::size_t j = 0; j < s.letters.dim(); ++j)
                        for (std::size_t u = 0; u < ws.size(); ++u)
                            d.comp[n].at(u, j) = amb[j * ws.size() + u];
                    return d;
                };
                Derivation xi = to_der(a1, p), eta = to_der(a2, q);
                Derivation br = commutator(s.letters, xi, eta);
                std::size_t rw = p + q;
                std::vector<Scalar> lhs(ci[rw].dim, Scalar::zero(s.letters.field));
                if (!br.comp[rw - 1].is_zero()) {
                    WordSpace ws = s.letters.words(rw - 1);
                    std::vector<Scalar> amb(ws.size() * s.letters.dim(),
                                            Scalar::zero(s.letters.field));
                    for (std::size_t u = 0; u < ws.size(); ++u)
                        for (std::size_t j = 0; j < s.letters.dim(); ++j)
                            amb[j * ws.size() + u] = br.comp[rw - 1].at(u, j);
                    lhs = ci[rw].projection.apply(fm[rw - 1].apply(amb));
                }
                CCElement x{p + 1, fm[p].apply(a1)}, y{q + 1, fm[q].apply(a2)};
                CCElement direct = cc_bracket(s, x, y);
                if (!(lhs == ci[rw].projection.apply(direct.rep))) return false;
                ++compared;
            }
    }
    return compared >= 40;
}

// ---- 8: the deformation layer ---------------------------------------------

bool deformation_layer() {
    std::mt19937_64 rng(1008);

    // gauge preserves MC at nilpotency orders q <= 4 (gauge_action verifies
    // the result internally and throws on failure)
    for (unsigned q = 2; q <= 4; ++q) {
        for (int it = 0; it < 6; ++it) {
            bool inv = it % 2;
            AInftyStructure s = random_structure(rng, inv, false, 4);
            Flavor flavor = inv ? Flavor::Involutive : Flavor::Plain;
            NilpotentRing ring = NilpotentRing::single(q);
            RDerivation zero;
            zero.ring = ring;
            zero.degree = 1;
            Derivation z1 = random_flavored_gauge(rng, s, inv, false, 3, 1);
            Derivation z2 = random_flavored_gauge(rng, s, inv, false, 3, 1);
            std::map<std::size_t, Derivation> t1, t2;
            if (!z1.is_zero()) t1[1] = z1;
            if (!z2.is_zero() && q > 2) t2[std::min<std::size_t>(2, q - 1)] = z2;
            RDerivation y1 = make_rderivation(ring, 0, t1);
            RDerivation y2 = make_rderivation(ring, 0, t2);
            RDerivation eta = gauge_action(s, y2, zero, flavor);
            RDerivation moved = gauge_action(s, y1, eta, flavor);
            if (!mc_check(s, moved, flavor).ok) return false;
            // group action through BCH
            RDerivation direct = gauge_action(s, bch(s, y1, y2), zero, flavor);
            if (!(moved - direct).is_zero()) return false;
        }
    }

    // BCH: commuting case and the order-3 closed form
    {
        AInftyStructure s = two_step_dga(4);
        NilpotentRing r4 = NilpotentRing::single(4);
        auto elems = hom_block_basis(s, 2, 0);
        if (elems.empty()) return false;
        Derivation z = Derivation::zero(s.letters, 0, s.trunc);
        z.comp[2].at(elems[0].first, elems[0].second) = Scalar(1);
        RDerivation x = make_rderivation(r4, 0, {{1, z}});
        RDerivation y = make_rderivation(r4, 0, {{2, z.scaled(Scalar(5))}});
        if (!(bch(s, x, y) - (x + y)).is_zero()) return false;

        NilpotentRing r3 = NilpotentRing::single(3);
        for (int it = 0; it < 4; ++it) {
            Derivation za = random_flavored_gauge(rng, s, false, false, 3, 1);
            Derivation zb = random_flavored_gauge(rng, s, false, false, 3, 1);
            RDerivation a = make_rderivation(r3, 0, za.is_zero()
                                                        ? std::map<std::size_t, Derivation>{}
                                                        : std::map<std::size_t, Derivation>{{1, za}});
            RDerivation b = make_rderivation(r3, 0, zb.is_zero()
                                                        ? std::map<std::size_t, Derivation>{}
                                                        : std::map<std::size_t, Derivation>{{1, zb}});
            RDerivation expect =
                a + b + r_bracket(s.letters, a, b).scaled(Scalar(1, 2));
            if (!(bch(s, a, b) - expect).is_zero()) return false;
        }
    }

    // exp/log round-trips are exact identities
    {
        AInftyStructure s = two_step_dga(3);
        NilpotentRing r3 = NilpotentRing::single(3);
        for (int it = 0; it < 5; ++it) {
            Derivation z = random_flavored_gauge(rng, s, false, false, 3, 1);
            Derivation z2 = random_flavored_gauge(rng, s, false, false, 3, 1);
            std::map<std::size_t, Derivation> terms;
            if (!z.is_zero()) terms[1] = z;
            if (!z2.is_zero()) terms[2] = z2;
            RDerivation y = make_rderivation(r3, 0, terms);
            TruncOperator phi = exp_operator(s, y);
            if (!phi.reduction_is_identity()) return false;
            RDerivation back = log_operator(s, phi);
            if (!(back - y).is_zero()) return false;
        }
    }

    // infinitesimal moduli match the cohomology route for all four flavors
    int matched = 0;
    while (matched < 20) {
        bool inv = matched % 2, cyc = (matched / 2) % 2;
        AInftyStructure s = random_structure(rng, inv, cyc, 4);
        Flavor flavor = inv ? (cyc ? Flavor::CyclicInvolutive : Flavor::Involutive)
                            : (cyc ? Flavor::Cyclic : Flavor::Plain);
        if (cyc && !s.base.form_nondegenerate()) continue;
        if (infinitesimal_moduli(s, flavor) != moduli_via_cohomology(s, flavor)) return false;
        ++matched;
    }
    return true;
}

// ---- 9: truncation stability ----------------------------------------------

bool truncation_stability() {
    std::mt19937_64 rng(1009);
    for (int it = 0; it < 6; ++it) {
        // degree-0 spaces with the zero structure at N = 4
        std::size_t dim = static_cast<std::size_t>(rand_int(rng, 1, 3));
        std::vector<std::pair<std::string, int>> basis;
        for (std::size_t i = 0; i < dim; ++i) basis.emplace_back("v" + std::to_string(i), 0);
        InvolutiveSpace v = make_involutive_space(basis);
        AInftyStructure s = make_structure(v, 4, {});
        AInftyStructure probe = make_structure(v, 5, {});

        // Hochschild: degree = weight for degree-zero spaces, so every
        // reported degree <= N is stable and unchanged at N+1.
        {
            CochainComplex c = hochschild_complex(s, 0, 4);
            CochainComplex pc = hochschild_complex(probe, 0, 4);
            auto rows = cohomology_table(c, &pc);
            auto prows = cohomology_table(pc);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!rows[i].stable) return false;
                if (rows[i].h_dim != prows[i].h_dim) return false;
            }
        }
        // Coinvariant complexes sit one degree lower (degree = weight - 1),
        // so the same holds up to degree N-1 and the probe must flag the
        // top degree as truncated rather than silently keeping it.
        {
            CochainComplex c = cyclic_complex(s, 0, 4);
            CochainComplex pc = cyclic_complex(probe, 0, 4);
            auto rows = cohomology_table(c, &pc);
            auto prows = cohomology_table(pc);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].degree <= 3) {
                    if (!rows[i].stable) return false;
                    if (rows[i].h_dim != prows[i].h_dim) return false;
                } else if (v.dim() > 0 && rows[i].stable) {
                    return false;  // weight N+1 content appears here
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "dihedral and skew-dihedral group relations on tensor powers", sign_engine);
    criterion(2, "import validation and rejection of single-entry perturbations",
              validation_and_perturbations);
    criterion(3, "Hochschild cohomology decomposes as HH = HH+ + HH-",
              hochschild_decomposition);
    criterion(4, "cyclic cohomology decomposes as HC = HD+ + HD-", cyclic_decomposition);
    criterion(5, "frozen dimension oracles (ground field, dual numbers, zero line)",
              derived_dimensions);
    criterion(6, "chain isomorphism between cyclic cochains and cyclic derivations",
              chain_isomorphism);
    criterion(7, "bracket transport matches the derivation commutator", bracket_consistency);
    criterion(8, "gauge/BCH/exp-log identities and moduli vs cohomology", deformation_layer);
    criterion(9, "truncation stability for degree-zero spaces", truncation_stability);
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
