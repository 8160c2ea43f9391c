#include "dihedra/engine.hpp"

#include <sstream>

namespace dihedra {

using nlohmann::ordered_json;

namespace {

ordered_json check_json(const CheckReport& r) {
    ordered_json j;
    j["check"] = r.check;
    j["ok"] = r.ok;
    ordered_json issues = ordered_json::array();
    for (const auto& i : r.issues) {
        ordered_json e;
        e["weight"] = i.weight;
        e["witness"] = i.witness;
        issues.push_back(e);
    }
    j["issues"] = issues;
    return j;
}

ordered_json input_echo(const AlgebraDescription& d, std::size_t trunc) {
    ordered_json j;
    j["field"] = d.field.str();
    j["dim"] = d.space.dim();
    j["truncation"] = trunc;
    j["involutive"] = d.involutive;
    j["cyclic"] = d.cyclic && d.space.form.has_value();
    return j;
}

ordered_json components_echo(const AInftyStructure& s) {
    ordered_json arr = ordered_json::array();
    for (std::size_t n = 0; n <= s.trunc; ++n) {
        const Matrix& c = s.m.comp[n];
        WordSpace ws = s.letters.words(n);
        for (std::size_t j = 0; j < c.cols(); ++j)
            for (std::size_t u = 0; u < c.rows(); ++u) {
                if (c.at(u, j).is_zero()) continue;
                ordered_json e;
                e["weight"] = n;
                e["generator"] = s.letters.names[j];
                ordered_json word = ordered_json::array();
                for (std::size_t letter : ws.word(u)) word.push_back(s.letters.names[letter]);
                e["word"] = word;
                e["coeff"] = c.at(u, j).str();
                arr.push_back(e);
            }
    }
    return arr;
}

ordered_json table_json(const std::vector<CohomologyRow>& rows, bool with_stability) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json e;
        e["degree"] = r.degree;
        e["cochain_dim"] = r.cochain_dim;
        e["h_dim"] = r.h_dim;
        if (with_stability) e["stability"] = r.stable ? "stable" : "truncated";
        arr.push_back(e);
    }
    return arr;
}

using Builder = std::function<CochainComplex(const AInftyStructure&, int, int)>;

Builder builder_for(const std::string& which) {
    if (which == "hh") return [](const AInftyStructure& s, int lo, int hi) {
        return hochschild_complex(s, lo, hi);
    };
    if (which == "hh+") return [](const AInftyStructure& s, int lo, int hi) {
        return hochschild_pm_complexes(s, lo, hi).first;
    };
    if (which == "hh-") return [](const AInftyStructure& s, int lo, int hi) {
        return hochschild_pm_complexes(s, lo, hi).second;
    };
    if (which == "hc") return [](const AInftyStructure& s, int lo, int hi) {
        return cyclic_complex(s, lo, hi);
    };
    if (which == "hd+") return [](const AInftyStructure& s, int lo, int hi) {
        return dihedral_complexes(s, lo, hi).first;
    };
    if (which == "hd-") return [](const AInftyStructure& s, int lo, int hi) {
        return dihedral_complexes(s, lo, hi).second;
    };
    if (which == "cycder") return [](const AInftyStructure& s, int lo, int hi) {
        return cyclic_derivation_complexes(s, lo, hi).whole;
    };
    throw std::invalid_argument("unknown theory \"" + which +
                                "\" (hh|hh+|hh-|hc|hd+|hd-|cycder)");
}

std::vector<CohomologyRow> build_rows(const AlgebraDescription& d, const Builder& build,
                                      std::size_t trunc, int lo, int hi,
                                      std::optional<long> filtration) {
    AInftyStructure s = d.structure(trunc);
    CochainComplex c = build(s, lo, hi);
    if (filtration) c = filtration_piece(c, *filtration);
    // The N+1 probe can be undetermined for structures that are only exact
    // modulo the truncation; report every degree as truncated then.
    try {
        AInftyStructure probe_s = d.structure(trunc + 1);
        CochainComplex probe = build(probe_s, lo, hi);
        if (filtration) probe = filtration_piece(probe, *filtration);
        return cohomology_table(c, &probe);
    } catch (const std::exception&) {
        return cohomology_table(c);
    }
}

}  // namespace

RunResult run_validate(const AlgebraDescription& d) {
    RunResult out;
    out.report["command"] = "validate";
    AInftyStructure s = d.structure();
    out.report["input"] = input_echo(d, s.trunc);
    out.report["structure_mode"] = d.structure_mode;
    out.report["components"] = components_echo(s);

    ordered_json checks = ordered_json::array();
    CheckReport sq = check_square_zero(s);
    checks.push_back(check_json(sq));
    out.ok = sq.ok;
    if (d.involutive) {
        CheckReport inv = check_involutive(s);
        CheckReport hat = check_hat_involutive(s);
        checks.push_back(check_json(inv));
        checks.push_back(check_json(hat));
        out.ok = out.ok && inv.ok && hat.ok;
        if (inv.ok != hat.ok)
            throw std::logic_error("involution checks disagree between formulations");
    }
    if (d.cyclic && d.space.form) {
        CheckReport cyc = check_cyclic(s);
        checks.push_back(check_json(cyc));
        out.ok = out.ok && cyc.ok;
    }
    out.report["checks"] = checks;
    out.report["ok"] = out.ok;
    return out;
}

RunResult run_cohomology(const AlgebraDescription& d, const std::string& which,
                         const CohomologyOptions& opts) {
    RunResult out;
    std::size_t trunc = opts.max_weight.value_or(d.truncation);
    int lo = opts.degrees ? opts.degrees->first : d.degree_lo;
    int hi = opts.degrees ? opts.degrees->second : d.degree_hi;

    out.report["command"] = "cohomology";
    out.report["which"] = which;
    out.report["input"] = input_echo(d, trunc);
    out.report["degrees"] = {lo, hi};
    if (opts.filtration) out.report["filtration"] = *opts.filtration;

    auto rows = build_rows(d, builder_for(which), trunc, lo, hi, opts.filtration);
    out.report["table"] = table_json(rows, true);

    if (opts.decompose) {
        std::string plus, minus;
        if (which == "hh") {
            plus = "hh+";
            minus = "hh-";
        } else if (which == "hc") {
            plus = "hd+";
            minus = "hd-";
        } else {
            throw std::invalid_argument("--decompose applies to hh or hc");
        }
        auto prow = build_rows(d, builder_for(plus), trunc, lo, hi, opts.filtration);
        auto mrow = build_rows(d, builder_for(minus), trunc, lo, hi, opts.filtration);
        out.report["plus_table"] = table_json(prow, true);
        out.report["minus_table"] = table_json(mrow, true);
        bool additive = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].h_dim != prow[i].h_dim + mrow[i].h_dim ||
                rows[i].cochain_dim != prow[i].cochain_dim + mrow[i].cochain_dim)
                additive = false;
        }
        out.report["additivity"] = additive ? "OK" : "FAILED";
        out.ok = additive;
    }
    out.report["ok"] = out.ok;
    return out;
}

RunResult run_deform(const AlgebraDescription& d, const DeformOptions& opts) {
    RunResult out;
    out.report["command"] = "deform";
    out.report["subcommand"] = opts.subcommand;
    out.report["flavor"] = opts.flavor;

    Flavor flavor = parse_flavor(opts.flavor);
    AInftyStructure s = d.structure();
    out.report["input"] = input_echo(d, s.trunc);

    // The structure must be valid in the requested flavor.
    if (!check_square_zero(s).ok) throw std::invalid_argument("structure fails m^2 = 0");
    if ((flavor == Flavor::Involutive || flavor == Flavor::CyclicInvolutive)) {
        if (!check_involutive(s).ok) throw std::invalid_argument("structure is not involutive");
        s.involutive = true;
    }
    if ((flavor == Flavor::Cyclic || flavor == Flavor::CyclicInvolutive)) {
        if (!s.base.form || !check_cyclic(s).ok)
            throw std::invalid_argument("structure is not cyclic");
        s.cyclic = true;
    }

    NilpotentRing ring = opts.ring ? NilpotentRing::parse(*opts.ring)
                                   : d.ring.value_or(NilpotentRing::single(2));
    if (opts.ring && d.ring && !(ring == *d.ring) && (!d.eta_terms.empty() || !d.y_terms.empty()))
        throw std::invalid_argument(
            "--ring conflicts with the ring the file's deformation data was written in");
    out.report["ring"] = ring.str();

    auto rder = [&](const std::map<std::size_t, Derivation>& terms, int degree) {
        RDerivation r;
        r.ring = ring;
        r.degree = degree;
        for (const auto& [mono, der] : terms) r.terms[mono] = der;
        return r;
    };

    auto element_echo = [&](const RDerivation& r) {
        ordered_json arr = ordered_json::array();
        for (const auto& [mono, der] : r.terms) {
            for (std::size_t n = 0; n <= s.trunc; ++n) {
                WordSpace ws = s.letters.words(n);
                for (std::size_t j = 0; j < der.comp[n].cols(); ++j)
                    for (std::size_t u = 0; u < der.comp[n].rows(); ++u) {
                        if (der.comp[n].at(u, j).is_zero()) continue;
                        ordered_json e;
                        e["monomial"] = ring.monomial_str(mono);
                        e["weight"] = n;
                        e["generator"] = s.letters.names[j];
                        ordered_json word = ordered_json::array();
                        for (std::size_t letter : ws.word(u))
                            word.push_back(s.letters.names[letter]);
                        e["word"] = word;
                        e["coeff"] = der.comp[n].at(u, j).str();
                        arr.push_back(e);
                    }
            }
        }
        return arr;
    };

    if (opts.subcommand == "mc-check") {
        RDerivation eta = rder(d.eta_terms, 1);
        McVerdict v = mc_check(s, eta, flavor);
        out.report["eta"] = element_echo(eta);
        out.report["mc"] = v.ok;
        out.report["witnesses"] = v.witnesses;
        out.ok = v.ok;
    } else if (opts.subcommand == "gauge") {
        RDerivation eta = rder(d.eta_terms, 1);
        RDerivation y = rder(d.y_terms, 0);
        RDerivation moved = gauge_action(s, y, eta, flavor);
        out.report["eta"] = element_echo(eta);
        out.report["y"] = element_echo(y);
        out.report["result"] = element_echo(moved);
        McVerdict v = mc_check(s, moved, flavor);
        out.report["mc_preserved"] = v.ok;
        out.ok = v.ok;
    } else if (opts.subcommand == "moduli") {
        std::size_t direct = infinitesimal_moduli(s, flavor);
        std::size_t viacoh = moduli_via_cohomology(s, flavor);
        out.report["dim"] = direct;
        out.report["h2"] = viacoh;
        out.report["match"] = direct == viacoh ? "MATCH" : "MISMATCH";
        out.ok = direct == viacoh;
    } else {
        throw std::invalid_argument("unknown deform subcommand \"" + opts.subcommand +
                                    "\" (mc-check|gauge|moduli)");
    }
    out.report["ok"] = out.ok;
    return out;
}

RunResult run_isocheck(const AlgebraDescription& d) {
    RunResult out;
    out.report["command"] = "iso-check";
    AInftyStructure s = d.structure();
    s.cyclic = true;
    out.report["input"] = input_echo(d, s.trunc);

    IsoReport rep = cc_der_isomorphism(s);
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows) {
        ordered_json e;
        e["der_weight"] = r.der_weight;
        e["der_dim"] = r.der_dim;
        e["cc_dim"] = r.cc_dim;
        e["bijective"] = r.bijective;
        if (s.involutive) e["pm_match"] = r.plus_minus_match;
        rows.push_back(e);
    }
    out.report["weights"] = rows;
    out.report["chain_map"] = rep.chain_ok;
    out.report["witnesses"] = rep.witnesses;
    out.ok = rep.ok;
    out.report["ok"] = out.ok;
    return out;
}

std::string render_table(const ordered_json& report) {
    std::ostringstream os;
    os << "== dihedra " << report.value("command", "?") << " ==\n";
    if (report.contains("which")) os << "theory: " << report["which"].get<std::string>() << "\n";
    if (report.contains("input")) {
        const auto& in = report["input"];
        os << "field " << in["field"].get<std::string>() << ", dim " << in["dim"]
           << ", truncation N = " << in["truncation"] << "\n";
    }
    if (report.contains("ring")) os << "ring: " << report["ring"].get<std::string>() << "\n";

    auto print_table = [&os](const ordered_json& t, const std::string& name) {
        os << name << ":\n  degree  cochain  H     flag\n";
        for (const auto& r : t) {
            os << "  " << r["degree"] << "\t  " << r["cochain_dim"] << "\t   "
               << r["h_dim"];
            if (r.contains("stability")) os << "     " << r["stability"].get<std::string>();
            os << "\n";
        }
    };
    if (report.contains("table")) print_table(report["table"], "table");
    if (report.contains("plus_table")) print_table(report["plus_table"], "plus");
    if (report.contains("minus_table")) print_table(report["minus_table"], "minus");
    if (report.contains("additivity"))
        os << "additivity: " << report["additivity"].get<std::string>() << "\n";

    if (report.contains("checks"))
        for (const auto& c : report["checks"]) {
            os << "check " << c["check"].get<std::string>() << ": "
               << (c["ok"].get<bool>() ? "pass" : "FAIL") << "\n";
            for (const auto& i : c["issues"])
                os << "    weight " << i["weight"] << ": " << i["witness"].get<std::string>()
                   << "\n";
        }
    if (report.contains("mc")) os << "mc: " << (report["mc"].get<bool>() ? "MC" : "not MC") << "\n";
    if (report.contains("mc_preserved"))
        os << "mc preserved: " << (report["mc_preserved"].get<bool>() ? "yes" : "NO") << "\n";
    if (report.contains("dim"))
        os << "dim = " << report["dim"] << ", H2 = " << report["h2"] << ", "
           << report["match"].get<std::string>() << "\n";
    if (report.contains("weights")) {
        os << "weight  der  cc   bijective\n";
        for (const auto& r : report["weights"]) {
            os << "  " << r["der_weight"] << "\t" << r["der_dim"] << "    " << r["cc_dim"]
               << "    " << (r["bijective"].get<bool>() ? "yes" : "NO");
            if (r.contains("pm_match"))
                os << (r["pm_match"].get<bool>() ? "  +/- match" : "  +/- MISMATCH");
            os << "\n";
        }
    }
    if (report.contains("chain_map"))
        os << "chain map: " << (report["chain_map"].get<bool>() ? "OK" : "FAILED") << "\n";
    if (report.contains("witnesses"))
        for (const auto& w : report["witnesses"]) os << "  ! " << w.get<std::string>() << "\n";
    os << (report.value("ok", false) ? "OK" : "FAILED") << "\n";
    return os.str();
}

}  // namespace dihedra
