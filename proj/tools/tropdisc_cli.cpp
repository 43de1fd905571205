#include <CLI11.hpp>

#include "tropdisc/errors.hpp"
#include "tropdisc/hornkapranov.hpp"
#include "tropdisc/polytope.hpp"
#include "tropdisc/report.hpp"
#include "tropdisc/system.hpp"
#include "tropdisc/tropical.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string polynomial_path;
    std::uint64_t seed = 0;
    int samples = 10;
    double tolerance = 1e-6;
    std::string output_path;
    std::string format = "structured";
};

void emit(const RunConfig& cfg, const tropdisc::Json& report) {
    std::string text =
        cfg.format == "human" ? tropdisc::render_human(report) : report.dump(2) + "\n";
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw tropdisc::Error("cannot open output file: " + cfg.output_path);
    out << text;
}

int run(const RunConfig& cfg) {
    const bool all = cfg.command == "all";
    const bool do_derive = all || cfg.command == "derive";
    const bool do_normals = all || cfg.command == "normals";
    const bool do_fan = all || cfg.command == "tropicalize";
    const bool do_oracle = all || cfg.command == "oracle-compare";
    const bool do_hk = all || cfg.command == "hk-verify";

    tropdisc::Json report;
    report["schema_version"] = 1;
    report["command"] = cfg.command;
    if (do_hk) {
        tropdisc::Json c;
        c["seed"] = cfg.seed;
        c["samples"] = cfg.samples;
        c["tolerance"] = cfg.tolerance;
        report["config"] = std::move(c);
    }

    tropdisc::SystemSpec spec = tropdisc::load_system(cfg.input_path);
    tropdisc::validate(spec);
    tropdisc::DerivedMatrices d = tropdisc::derive(spec);

    tropdisc::SupportPolynomial delta;
    if (do_oracle || do_hk) delta = tropdisc::load_polynomial(cfg.polynomial_path, d.N);

    if (do_derive) report["derived"] = tropdisc::derived_report(d);
    if (do_normals) report["normals"] = tropdisc::normals_report(tropdisc::theorem1_normals(d));

    int status = 0;
    tropdisc::TropicalFan fan;
    if (do_fan || do_oracle) fan = tropdisc::tropicalize(d);
    if (do_fan) report["tropical"] = tropdisc::tropical_report(fan);

    if (do_oracle) {
        tropdisc::PolytopeFacets oracle = tropdisc::facet_normals(delta);
        tropdisc::RayComparison cmp = tropdisc::compare_rays(oracle, fan);
        report["oracle"] = tropdisc::oracle_report(oracle, cmp);
        if (!cmp.oracle_only.empty() || !cmp.fan_only.empty()) status = 3;
    }

    if (do_hk) {
        std::vector<tropdisc::ParameterPoint> points =
            tropdisc::sample_points(d, cfg.samples, cfg.seed);
        std::vector<tropdisc::ResidualSample> rows;
        for (const tropdisc::ParameterPoint& s : points) {
            tropdisc::ResidualSample r;
            r.s = s.s;
            r.branch_count = int(tropdisc::eval_x_branches(d, s).size());
            r.residual_value = tropdisc::residual(d, delta, s);
            rows.push_back(std::move(r));
        }
        tropdisc::Json h = tropdisc::hk_report(rows, cfg.tolerance);
        bool ok = h["all_below_tolerance"].get<bool>();
        report["hk"] = std::move(h);
        if (!ok && status == 0) status = 4;
    }

    emit(cfg, report);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropicalization of the discriminant of a reduced polynomial system"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input_path, "System description (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", cfg.output_path, "Write the report here instead of stdout");
        sub->add_option("--format", cfg.format, "Report format (default structured)")
            ->check(CLI::IsMember({"structured", "human"}));
    };
    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("--poly", cfg.polynomial_path, "Discriminant polynomial file")
            ->required()
            ->check(CLI::ExistingFile);
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Sampling seed (default 0)");
        sub->add_option("--samples", cfg.samples, "Number of parameter points (default 10)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol", cfg.tolerance, "Residual tolerance (default 1e-6)")
            ->check(CLI::PositiveNumber);
    };

    add_io(app.add_subcommand("derive", "Derived matrices of the system (Psi, Phi, U, V)"));
    add_io(app.add_subcommand("normals", "Candidate inner normal directions of the discriminant"));
    add_io(app.add_subcommand("tropicalize",
                              "Tropical discriminant: cones, rays, hidden rays, multiplicity"));
    {
        CLI::App* sub = app.add_subcommand(
            "oracle-compare", "Compare fan rays against the facet normals of a Newton polytope");
        add_io(sub);
        add_poly(sub);
    }
    {
        CLI::App* sub = app.add_subcommand(
            "hk-verify", "Check the rational parametrization against a discriminant polynomial");
        add_io(sub);
        add_poly(sub);
        add_sampling(sub);
    }
    {
        CLI::App* sub = app.add_subcommand("all", "Run the whole pipeline on one system");
        add_io(sub);
        add_poly(sub);
        add_sampling(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return run(cfg);
    } catch (const tropdisc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
