// gybe — construct the R-matrix families and verify their equations.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gybe/runner.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"R-matrix families and Yang-Baxter equation verification"};
    app.require_subcommand(1);

    gybe::RunConfig cfg;
    std::string shape_str, dims_str, params_inline;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--report", cfg.output_path, "write the JSON report to this path");
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "family id (see `families`)")->required();
        sub->add_option("--params", cfg.params_path, "JSON parameter file");
        sub->add_option("--set", params_inline, "inline JSON parameter overrides");
    };

    CLI::App* families = app.add_subcommand("families", "list the family registry");
    add_common(families);

    CLI::App* build = app.add_subcommand("build", "construct one family matrix");
    add_family(build);
    build->add_option("--u", cfg.u, "spectral argument");
    int build_dim = 0;
    auto* dim_opt = build->add_option("--dim", build_dim, "matrix dimension (m-matrix)");
    add_common(build);

    for (const char* name : {"verify", "sweep"}) {
        CLI::App* sub = app.add_subcommand(name, name == std::string("verify")
                                                     ? "verify one equation"
                                                     : "seeded residual sweep");
        add_family(sub);
        sub->add_option("--shape", shape_str, "homogeneous shape d,k,p");
        sub->add_option("--dims", dims_str, "inhomogeneous dims N1,N2,N3");
        sub->add_flag("--full-set", cfg.full_set,
                      "with --dims, verify all three cyclic equations");
        sub->add_option("--samples", cfg.samples, "number of (u,v) samples");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--tol", cfg.tol,
                        "max-abs residual tolerance (default 1e-10, 1e-9 for chains >= 64)");
        auto* ou = sub->add_option("--u", cfg.u, "explicit u (verify only)");
        auto* ov = sub->add_option("--v", cfg.v, "explicit v (verify only)");
        ou->needs(ov);
        add_common(sub);
    }

    CLI::App* search = app.add_subcommand("parity-search", "brute-force parity/phase search");
    search->add_option("--mode", cfg.mode, "symmetric|random|fractional")->required();
    search->add_option("--target", cfg.target, "ybe-2-4-2 | gybe-2-4-1 | gybe-2-4-3");
    search->add_option("--budget", cfg.budget, "random-mode trial budget");
    search->add_option("--seed", cfg.seed, "RNG seed");
    search->add_option("--tol", cfg.tol, "residual tolerance");
    add_common(search);

    CLI::App* transfer = app.add_subcommand("transfer", "cyclic-chain transfer matrix");
    add_family(transfer);
    transfer->add_option("--sites", cfg.sites, "chain length");
    transfer->add_option("--u", cfg.u, "spectral argument");
    add_common(transfer);

    CLI::App* ham = app.add_subcommand("hamiltonian", "logarithmic-derivative Hamiltonian");
    add_family(ham);
    ham->add_option("--sites", cfg.sites, "chain length");
    ham->add_option("--fd-step", cfg.fd_step, "central difference step");
    add_common(ham);

    CLI::App* part = app.add_subcommand("partition", "toric partition function");
    add_family(part);
    part->add_option("--sites", cfg.sites, "chain length");
    part->add_option("--rows", cfg.rows, "number of transfer-matrix rows");
    part->add_option("--u", cfg.u, "spectral argument");
    add_common(part);

    CLI::App* gate = app.add_subcommand("gate", "unitarized gate, angles and concurrences");
    gate->add_option("--gamma", cfg.gamma, "first rate");
    gate->add_option("--beta", cfg.beta, "second rate");
    gate->add_option("--u", cfg.u, "spectral argument");
    gate->add_option("--alpha", cfg.alpha, "phase of q = e^{i alpha}");
    auto* sched = gate->add_option("--schedule", cfg.schedule_t, "evaluate the time schedule at t");
    add_common(gate);

    CLI11_PARSE(app, argc, argv);

    if (!shape_str.empty()) cfg.shape = parse_int_list(shape_str);
    if (!dims_str.empty()) cfg.dims = parse_int_list(dims_str);
    if (!params_inline.empty()) {
        try {
            cfg.params = gybe::json::parse(params_inline);
        } catch (const gybe::json::parse_error& e) {
            std::cerr << "--set: malformed JSON: " << e.what() << "\n";
            return 2;
        }
    }
    for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.command == "build" && dim_opt->count() > 0) cfg.params["dim"] = build_dim;
    if (cfg.command == "verify") cfg.have_uv = app.get_subcommand("verify")->count("--u") > 0;
    if (cfg.command == "gate") cfg.have_schedule = sched->count() > 0;

    const gybe::RunResult res = gybe::run(cfg);
    std::cout << res.report;
    return res.exit_code;
}
