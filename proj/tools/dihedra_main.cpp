#include <iostream>

#include <CLI11.hpp>

#include "dihedra/engine.hpp"

using namespace dihedra;

namespace {

int emit(const RunResult& r, const std::string& format) {
    if (format == "json")
        std::cout << r.report.dump(2) << "\n";
    else
        std::cout << render_table(r.report);
    return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dihedra: validation, cohomology and deformations of involutive and cyclic "
                 "A-infinity structures"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string file, format = "table";
    app.add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));

    auto* validate = app.add_subcommand("validate", "run the applicable structure checks");
    validate->add_option("file", file, "algebra description (JSON)")->required();

    std::string which;
    CohomologyOptions copts;
    unsigned max_weight = 0;
    std::string degrees_arg;
    long filtration = 0;
    auto* cohomology = app.add_subcommand("cohomology", "per-degree dimension tables");
    cohomology->add_option("file", file)->required();
    cohomology->add_option("--which", which, "hh|hh+|hh-|hc|hd+|hd-|cycder")->required();
    auto* mw = cohomology->add_option("--max-weight", max_weight, "truncation override");
    auto* dg = cohomology->add_option("--degrees", degrees_arg, "a..b");
    auto* ft = cohomology->add_option("--filtration", filtration, "weight filtration level");
    cohomology->add_flag("--decompose", copts.decompose,
                         "print both summands and assert additivity");

    DeformOptions dopts;
    std::string ring_arg;
    auto* deform = app.add_subcommand("deform", "Maurer-Cartan / gauge / moduli");
    deform->add_option("file", file)->required();
    deform->add_option("subcommand", dopts.subcommand, "mc-check|gauge|moduli")
        ->required()
        ->check(CLI::IsMember({"mc-check", "gauge", "moduli"}));
    auto* rg = deform->add_option("--ring", ring_arg, "e.g. \"eps^3\"");
    deform->add_option("--flavor", dopts.flavor, "plain|inv|cyc|cycinv")
        ->check(CLI::IsMember({"plain", "inv", "cyc", "cycinv"}));

    auto* isocheck = app.add_subcommand("iso-check", "cyclic cochains vs cyclic derivations");
    isocheck->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        AlgebraDescription desc = parse_description_file(file);
        if (validate->parsed()) return emit(run_validate(desc), format);
        if (cohomology->parsed()) {
            if (*mw) copts.max_weight = max_weight;
            if (*dg) {
                auto dots = degrees_arg.find("..");
                if (dots == std::string::npos)
                    throw std::invalid_argument("--degrees expects a..b");
                copts.degrees = {std::stoi(degrees_arg.substr(0, dots)),
                                 std::stoi(degrees_arg.substr(dots + 2))};
            }
            if (*ft) copts.filtration = filtration;
            return emit(run_cohomology(desc, which, copts), format);
        }
        if (deform->parsed()) {
            if (*rg) dopts.ring = ring_arg;
            return emit(run_deform(desc, dopts), format);
        }
        if (isocheck->parsed()) return emit(run_isocheck(desc), format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
