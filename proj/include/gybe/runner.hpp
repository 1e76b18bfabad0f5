// Command dispatch shared by the CLI binary and the tests: every command is
// a pure function of its RunConfig (plus the seed), producing one JSON
// document, so identical configs give byte-identical output.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include "gybe/families.hpp"
#include "gybe/gates.hpp"
#include "gybe/integrability.hpp"
#include "gybe/io.hpp"
#include "gybe/verify.hpp"

namespace gybe {

struct RunConfig {
    std::string command;       // families | build | verify | sweep | parity-search |
                               // transfer | hamiltonian | partition | gate
    std::string family;
    std::string params_path;   // optional JSON parameter file
    json params;               // inline parameters (override file)
    std::vector<int> shape;    // homogeneous (d,k,p)
    std::vector<int> dims;     // inhomogeneous [N1,N2,N3]
    bool full_set = false;
    int samples = 50;
    std::uint64_t seed = 1;
    double tol = 0.0;  // 0 = dimension-based default
    double u = 0.0, v = 0.0;
    bool have_uv = false;
    // search
    std::string mode;          // symmetric | random | fractional
    std::string target;
    int budget = 64;
    // integrability
    int sites = 3, rows = 1;
    double fd_step = 1e-5;
    // gate
    double gamma = 0.6, beta = 1.1, alpha = 0.0;
    bool have_schedule = false;
    double schedule_t = 0.0;
    std::string output_path;
};

struct RunResult {
    int exit_code = 0;
    std::string report;  // JSON text
};

namespace detail {

inline json resolved_params(const RunConfig& cfg, const FamilyEntry& fam) {
    json p = fam.defaults;
    if (!cfg.params_path.empty()) {
        const json file = load_json_file(cfg.params_path);
        p.update(file);
    }
    if (!cfg.params.is_null()) p.update(cfg.params);
    return p;
}

inline GybeShape shape_from_config(const RunConfig& cfg, const FamilyEntry& fam) {
    if (!cfg.shape.empty()) {
        if (cfg.shape.size() != 3) throw ConfigError("--shape expects d,k,p");
        EqForm form = EqForm::SpectralDifference;
        if (!fam.checks.empty()) form = fam.checks.front().shape.form;
        return GybeShape::gybe(cfg.shape[0], cfg.shape[1], cfg.shape[2], form);
    }
    if (!cfg.dims.empty()) {
        if (cfg.dims.size() != 3) throw ConfigError("--dims expects N1,N2,N3");
        return GybeShape::inhom(cfg.dims[0], cfg.dims[1], cfg.dims[2]);
    }
    if (fam.checks.empty()) throw ConfigError("family has no certified shape; pass --shape");
    return fam.checks.front().shape;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// rounding accumulates over the embedded triple products, so large chains
// get the looser default
inline double resolved_tol(double requested, const GybeShape& shape) {
    if (requested > 0.0) return requested;
    return shape.dims.total() >= 64 ? 1e-9 : 1e-10;
}

}  // namespace detail

inline RunResult run(const RunConfig& cfg) {
    RunResult res;
    json out;

    try {
        if (cfg.command == "families") {
            json arr = json::array();
            for (const FamilyEntry& f : family_registry()) {
                json shapes = json::array();
                for (const CertifiedCheck& c : f.checks)
                    shapes.push_back(json{{"shape", c.shape.id()}, {"tol", c.tol}});
                arr.push_back(json{{"id", f.id},
                                   {"description", f.description},
                                   {"defaults", f.defaults},
                                   {"certified", shapes}});
            }
            out = json{{"families", arr}};
        } else if (cfg.command == "build") {
            const FamilyEntry* fam = find_family(cfg.family);
            if (!fam) {
                json err{{"error", "unknown family '" + cfg.family + "'"},
                         {"known", family_ids()}};
                res.report = detail::dump(err);
                res.exit_code = 2;
                return res;
            }
            const FamilyHandle h = fam->make(detail::resolved_params(cfg, *fam));
            out = json{{"family", cfg.family}, {"u", cfg.u},
                       {"matrix", matrix_to_json(h.scalar(cfg.u))}};
        } else if (cfg.command == "verify" || cfg.command == "sweep") {
            const FamilyEntry* fam = find_family(cfg.family);
            if (!fam) {
                json err{{"error", "unknown family '" + cfg.family + "'"},
                         {"known", family_ids()}};
                res.report = detail::dump(err);
                res.exit_code = 2;
                return res;
            }
            const FamilyHandle h = fam->make(detail::resolved_params(cfg, *fam));
            const GybeShape shape = detail::shape_from_config(cfg, *fam);
            const double tol = detail::resolved_tol(cfg.tol, shape);
            if (cfg.full_set) {
                if (cfg.dims.size() != 3)
                    throw ConfigError("--full-set requires --dims N1,N2,N3");
                Rng rng(cfg.seed);
                json reps = json::array();
                bool all_pass = true;
                std::vector<VerificationReport> worst(3);
                for (int s = 0; s < cfg.samples; ++s) {
                    const double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
                    const auto rs = verify_inhomogeneous(
                        h.span, {cfg.dims[0], cfg.dims[1], cfg.dims[2]}, u, v, true, tol);
                    for (int c = 0; c < 3; ++c)
                        if (rs[c].max_abs_residual >= worst[c].max_abs_residual) {
                            worst[c] = rs[c];
                            worst[c].seed = cfg.seed;
                        }
                }
                for (VerificationReport& w : worst) {
                    w.samples = cfg.samples;
                    w.finish(tol);
                    all_pass = all_pass && w.pass;
                    reps.push_back(report_to_json(w));
                }
                out = json{{"family", cfg.family}, {"reports", reps}};
                res.exit_code = all_pass ? 0 : 1;
                res.report = detail::dump(out);
                if (!cfg.output_path.empty()) write_text_file(cfg.output_path, res.report);
                return res;
            }
            VerificationReport rep;
            if (cfg.command == "verify" && cfg.have_uv) {
                switch (shape.form) {
                    case EqForm::SpectralSecondKind:
                        rep = verify_second_kind(h.scalar, cfg.u, cfg.v, tol);
                        break;
                    case EqForm::Factorized:
                        rep = verify_factorized(h.scalar, h.fbar, cfg.u, cfg.v, tol);
                        break;
                    default:
                        rep = verify_spectral(h.span, shape, cfg.u, cfg.v, tol);
                }
                rep.seed = cfg.seed;
            } else {
                SweepSpec spec;
                spec.family = h.span;
                spec.shape = shape;
                spec.n_samples = cfg.samples;
                spec.seed = cfg.seed;
                spec.tol = tol;
                spec.scalar_family = h.scalar;
                spec.fbar = h.fbar;
                rep = sweep(spec);
            }
            out = json{{"family", cfg.family}, {"report", report_to_json(rep)}};
            res.exit_code = rep.pass ? 0 : 1;
        } else if (cfg.command == "parity-search") {
            SearchMode mode;
            if (cfg.mode == "symmetric") mode = SearchMode::SymmetricConstrained;
            else if (cfg.mode == "random") mode = SearchMode::RandomUnconstrained;
            else if (cfg.mode == "fractional") mode = SearchMode::FractionalPhases;
            else throw ConfigError("--mode must be symmetric|random|fractional");
            const std::string target = cfg.target.empty() ? "ybe-2-4-2" : cfg.target;
            const ParityCatalog cat = parity_search(
                mode, target, cfg.budget, cfg.seed, cfg.tol > 0.0 ? cfg.tol : 1e-10);
            out = json{{"mode", cfg.mode}, {"catalog", catalog_to_json(cat)}};
        } else if (cfg.command == "transfer" || cfg.command == "hamiltonian" ||
                   cfg.command == "partition") {
            const FamilyEntry* fam = find_family(cfg.family);
            if (!fam) {
                json err{{"error", "unknown family '" + cfg.family + "'"},
                         {"known", family_ids()}};
                res.report = detail::dump(err);
                res.exit_code = 2;
                return res;
            }
            const FamilyHandle h = fam->make(detail::resolved_params(cfg, *fam));
            ChainSpec chain;
            chain.n_sites = cfg.sites;
            const CMatrix probe = h.scalar(0.1);
            int d = 2;
            while (static_cast<std::size_t>(d) * d < probe.rows()) ++d;
            chain.site_dim = d;
            chain.family = h.scalar;
            if (cfg.command == "transfer") {
                out = json{{"family", cfg.family}, {"sites", cfg.sites}, {"u", cfg.u},
                           {"matrix", matrix_to_json(transfer_matrix(chain, cfg.u))}};
            } else if (cfg.command == "hamiltonian") {
                const HamiltonianExtract ex = hamiltonian_extract(chain, cfg.fd_step);
                out = json{{"family", cfg.family}, {"sites", cfg.sites},
                           {"fd_step", cfg.fd_step},
                           {"tau0_condition", ex.tau0_condition},
                           {"commutator_with_tau", ex.commutator_with_tau},
                           {"matrix", matrix_to_json(ex.h)}};
            } else {
                const cplx z = partition_function(chain, cfg.rows, cfg.u);
                out = json{{"family", cfg.family}, {"sites", cfg.sites}, {"rows", cfg.rows},
                           {"u", cfg.u}, {"value", complex_to_json(z)}};
            }
        } else if (cfg.command == "gate") {
            if (cfg.have_schedule) {
                const GateParams gp = time_schedule(cfg.schedule_t);
                const CMatrix g = gate_from_params(gp);
                json conc = json::array();
                for (int i = 0; i < 4; ++i) conc.push_back(concurrence(apply_gate(g, i)));
                out = json{{"t", cfg.schedule_t}, {"theta_u", gp.theta_u},
                           {"epsilon_u", gp.epsilon_u}, {"concurrences", conc},
                           {"matrix", matrix_to_json(g)}};
            } else {
                const auto [g, gp] = unitarize(cfg.gamma, cfg.beta, cfg.u, cfg.alpha);
                json conc = json::array();
                for (int i = 0; i < 4; ++i) conc.push_back(concurrence(apply_gate(g, i)));
                out = json{{"gamma", cfg.gamma}, {"beta", cfg.beta}, {"u", cfg.u},
                           {"alpha", cfg.alpha}, {"theta_u", gp.theta_u},
                           {"epsilon_u", gp.epsilon_u}, {"concurrences", conc},
                           {"matrix", matrix_to_json(g)}};
            }
        } else {
            throw ConfigError("unknown command '" + cfg.command + "'");
        }
    } catch (const ConfigError& e) {
        res.report = detail::dump(json{{"error", e.what()}});
        res.exit_code = 2;
        return res;
    } catch (const std::exception& e) {
        res.report = detail::dump(json{{"error", e.what()}});
        res.exit_code = 2;
        return res;
    }

    res.report = detail::dump(out);
    if (!cfg.output_path.empty()) write_text_file(cfg.output_path, res.report);
    return res;
}

}  // namespace gybe
