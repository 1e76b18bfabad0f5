// The family registry: every solution family the repo certifies, keyed by
// id, with parameter defaults and the equation shapes each family is
// certified against. The CLI and the test suite both iterate this table.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gybe/blocks.hpp"
#include "gybe/gates.hpp"
#include "gybe/io.hpp"
#include "gybe/matrix.hpp"
#include "gybe/permutations.hpp"
#include "gybe/verify.hpp"
#include "gybe/xshape.hpp"

namespace gybe {

struct FamilyHandle {
    SpanFamily span;                        // operator per covered site dims
    std::function<CMatrix(double)> scalar;  // single-matrix view (build, special forms)
    std::function<cplx(double)> fbar;       // scalar function of the factorized relation
};

struct CertifiedCheck {
    GybeShape shape;
    double tol = 1e-10;
};

struct FamilyEntry {
    std::string id;
    std::string description;
    json defaults;
    std::function<FamilyHandle(const json&)> make;
    std::vector<CertifiedCheck> checks;
};

namespace detail {

inline long prod(const std::vector<int>& v) {
    long t = 1;
    for (int d : v) t *= d;
    return t;
}

// uniform X-shaped assembly: every cell the same block
inline CMatrix uniform_assembly(int n1, int n2, const BlockFn& cell, double u) {
    BlockMap bm;
    bm.n1 = n1;
    bm.n2 = n2;
    for (const auto& pr : bm.required_pairs()) bm.cells[pr] = cell;
    return assemble_x_shaped(bm, u);
}

inline cplx eps_from_json(const json& j) { return complex_from_json(j); }

}  // namespace detail

inline std::vector<FamilyEntry> make_family_registry() {
    std::vector<FamilyEntry> reg;
    using detail::prod;

    reg.push_back(FamilyEntry{
        "trig-block",
        "hyperbolic eight-vertex 4x4 cell, two-parametric sign configurations",
        json{{"gamma", 0.3}, {"beta", 0.7}, {"q", json{{"re", 2.0}, {"im", 0.0}}},
             {"t", 1}, {"t1", -1}, {"t2", -1}},
        [](const json& j) {
            const TrigBlockParams p = trig_params_from_json(j);
            FamilyHandle h;
            h.scalar = [p](double u) { return build_trig_block(p, u); };
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::gybe(2, 2, 1), 1e-11}}});

    reg.push_back(FamilyEntry{
        "diag-block",
        "diagonal exponential 4x4 cell",
        json{{"thetas", std::vector<double>{0.25, -0.4, 0.8, 0.15}}},
        [](const json& j) {
            const auto th = diag_params_from_json(j);
            FamilyHandle h;
            h.scalar = [th](double u) { return build_diag_block(th, u); };
            h.span = homogeneous_family(h.scalar);
            h.fbar = [](double) { return cplx(1.0); };
            return h;
        },
        {{GybeShape::gybe(2, 2, 1), 1e-12}}});

    for (const int variant : {+1, -1}) {
        reg.push_back(FamilyEntry{
            variant == 1 ? "xxz-plus" : "xxz-minus",
            variant == 1 ? "XXZ-model 4x4 cell" : "XX-model in a transverse field, 4x4 cell",
            json{{"u0", 1.1}, {"gamma", 0.3}, {"variant", variant == 1 ? "plus" : "minus"},
                 {"a", 1.0}, {"overall_alpha", 0.0}},
            [](const json& j) {
                const XxzBlockParams p = xxz_params_from_json(j);
                FamilyHandle h;
                h.scalar = [p](double u) { return build_xxz_block(p, u); };
                h.span = homogeneous_family(h.scalar);
                return h;
            },
            {{GybeShape::gybe(2, 2, 1), 1e-11}}});
    }

    reg.push_back(FamilyEntry{
        "deformed-block",
        "two-rate cell with complex deformations q, t (t = ±1 for the homogeneous equation)",
        json{{"alpha0", 0.4}, {"alphax", 0.9}, {"q", json{{"re", 2.0}, {"im", 0.0}}},
             {"t", json{{"re", 1.0}, {"im", 0.0}}}},
        [](const json& j) {
            const DeformedBlockParams p = deformed_params_from_json(j);
            FamilyHandle h;
            h.scalar = [p](double u) { return build_deformed_block(p, u); };
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::gybe(2, 2, 1), 1e-11}}});

    reg.push_back(FamilyEntry{
        "m-matrix",
        "cosh(u) I + sinh(u) M at any even dimension; dimension follows the requested span",
        json{{"dim", 4}},
        [](const json& j) {
            const int dim = j.value("dim", 4);
            FamilyHandle h;
            h.scalar = [dim](double u) { return build_m_family(dim, u); };
            h.span = [](const std::vector<int>& d, double u) {
                return build_m_family(static_cast<int>(detail::prod(d)), u);
            };
            return h;
        },
        {{GybeShape::gybe(2, 2, 1), 1e-12},
         {GybeShape::inhom(2, 4, 2), 1e-12},
         {GybeShape::inhom(4, 4, 4), 1e-12}}});

    reg.push_back(FamilyEntry{
        "x16-family",
        "four-color graded permutation superposition, 16x16, integer phases",
        json{{"alphas", std::vector<double>{1, 1, 1, 1}},
             {"eps", json::array({json{{"re", 1.0}}, json{{"re", 1.0}}, json{{"re", 1.0}}})}},
        [](const json& j) {
            const auto av = j.at("alphas").get<std::vector<double>>();
            std::array<double, 4> alphas{1, 1, 1, 1};
            for (std::size_t i = 0; i < std::min<std::size_t>(4, av.size()); ++i) alphas[i] = av[i];
            // equal alphas with eps signs use the compact form; general alpha
            // patterns use the parity superposition
            const json ej = j.at("eps");
            const cplx ex = complex_from_json(ej.at(0)), ey = complex_from_json(ej.at(1)),
                       ez = complex_from_json(ej.at(2));
            FamilyHandle h;
            const bool integer_eps = std::abs(ex.imag()) + std::abs(ey.imag()) +
                                     std::abs(ez.imag()) < 1e-15;
            if (integer_eps) {
                auto bit = [](cplx e) { return e.real() > 0 ? 0 : 1; };
                const ParityAssignment par = symmetric_parity(bit(ex), bit(ey), bit(ez) ^ 1);
                h.scalar = [alphas, par](double u) { return build_r44(alphas, par, u); };
            } else {
                h.scalar = [=](double u) { return build_r44_eps(ex, ey, ez, u); };
            }
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::gybe(4, 2, 1), 1e-10}}});

    reg.push_back(FamilyEntry{
        "x16-fractional",
        "16x16 family with fractional parities (phases ±i), GYBE shifted by one site",
        json{{"eps", json::array({json{{"re", 1.0}}, json{{"re", 0.0}, {"im", 1.0}},
                                  json{{"re", 0.0}, {"im", 1.0}}})}},
        [](const json& j) {
            const json ej = j.at("eps");
            const cplx ex = complex_from_json(ej.at(0)), ey = complex_from_json(ej.at(1)),
                       ez = complex_from_json(ej.at(2));
            FamilyHandle h;
            h.scalar = [=](double u) { return build_r44_eps(ex, ey, ez, u); };
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::gybe(2, 4, 1), 1e-10}, {GybeShape::gybe(2, 4, 3), 1e-10}}});

    // single-color matrices are exact solutions too, but of the exceptional
    // type with R(0) != I; they are exercised in the test suite and not
    // registered, to keep locality a registry-wide property

    reg.push_back(FamilyEntry{
        "bell-gate",
        "unitarized two-parametric gate, q = e^{i alpha}",
        json{{"gamma", 0.6}, {"beta", 1.1}, {"alpha", 0.45}},
        [](const json& j) {
            const double g = j.value("gamma", 0.6), b = j.value("beta", 1.1),
                         a = j.value("alpha", 0.45);
            FamilyHandle h;
            h.scalar = [=](double u) { return unitarize(g, b, u, a).first; };
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::gybe(2, 2, 1), 1e-11}}});

    reg.push_back(FamilyEntry{
        "xshape-24",
        "(2,4)/(4,2) matrices assembled from one trig cell in every slot",
        json{{"cell", json{{"kind", "trig"}, {"gamma", 0.3}, {"beta", 0.7},
                           {"q", json{{"re", 2.0}}}, {"t", 1}, {"t1", -1}, {"t2", -1}}}},
        [](const json& j) {
            const BlockFn cell = block_from_json(j.at("cell"));
            FamilyHandle h;
            h.span = [cell](const std::vector<int>& d, double u) {
                if (d.size() != 2) throw DimensionError("xshape-24: two-site spans only");
                return detail::uniform_assembly(d[0], d[1], cell, u);
            };
            h.scalar = [h](double u) { return h.span({2, 4}, u); };
            return h;
        },
        {{GybeShape::inhom(2, 4, 2), 1e-10}, {GybeShape::inhom(4, 2, 4), 1e-10}}});

    reg.push_back(FamilyEntry{
        "xshape-48",
        "(4,8)/(8,4) matrices assembled from one trig cell in every slot",
        json{{"cell", json{{"kind", "trig"}, {"gamma", 0.3}, {"beta", 0.7},
                           {"q", json{{"re", 2.0}}}, {"t", 1}, {"t1", -1}, {"t2", -1}}}},
        [](const json& j) {
            const BlockFn cell = block_from_json(j.at("cell"));
            FamilyHandle h;
            h.span = [cell](const std::vector<int>& d, double u) {
                if (d.size() != 2) throw DimensionError("xshape-48: two-site spans only");
                return detail::uniform_assembly(d[0], d[1], cell, u);
            };
            h.scalar = [h](double u) { return h.span({4, 8}, u); };
            return h;
        },
        {{GybeShape::inhom(4, 8, 4), 1e-10}}});

    reg.push_back(FamilyEntry{
        "appendix-trig",
        "two-parametric trigonometric 8x8 pair with a permissible rate pattern",
        json{{"alpha0", 0.4}, {"alphax", 0.9},
             {"rates", std::vector<double>{0.4, 0.9, 0.4, 0.9}}, {"alpha_pref", 0.25}},
        [](const json& j) {
            AppendixTrigParams p;
            p.alpha0 = j.value("alpha0", 0.4);
            p.alphax = j.value("alphax", 0.9);
            const auto rv = j.at("rates").get<std::vector<double>>();
            for (std::size_t i = 0; i < std::min<std::size_t>(4, rv.size()); ++i) p.rates[i] = rv[i];
            p.alpha_pref = j.value("alpha_pref", 0.25);
            FamilyHandle h;
            h.span = [p](const std::vector<int>& d, double u) {
                if (d == std::vector<int>{2, 4}) return build_appendix_trig(Appendix8x8Kind::Trig24, p, u);
                if (d == std::vector<int>{4, 2}) return build_appendix_trig(Appendix8x8Kind::Trig42, p, u);
                throw DimensionError("appendix-trig: spans (2,4) or (4,2)");
            };
            h.scalar = [h](double u) { return h.span({2, 4}, u); };
            return h;
        },
        {{GybeShape::inhom(2, 4, 2), 1e-11}, {GybeShape::inhom(4, 2, 4), 1e-11}}});

    for (const int variant : {+1, -1}) {
        reg.push_back(FamilyEntry{
            variant == 1 ? "appendix-xxz-plus" : "appendix-xxz-minus",
            "XXZ-type 8x8 pair with the crossing constants tied to the 4x4 cell",
            json{{"variant", variant == 1 ? "plus" : "minus"}, {"u0", 1.1}, {"ux", 1.1},
                 {"gamma", 0.3}, {"beta", 0.55}, {"a0", 1.0}, {"ax", 1.0}, {"alpha_pref", 0.2}},
            [](const json& j) {
                AppendixXxzParams p;
                p.variant = j.value("variant", std::string("plus")) == "minus" ? -1 : +1;
                p.u0 = j.value("u0", 1.1);
                p.ux = j.value("ux", 1.1);
                p.gamma = j.value("gamma", 0.3);
                p.beta = j.value("beta", 0.55);
                p.a0 = j.value("a0", 1.0);
                p.ax = j.value("ax", 1.0);
                p.alpha_pref = j.value("alpha_pref", 0.2);
                const XxzBlockParams cell{p.u0, p.gamma, p.variant, p.a0, 0.0};
                FamilyHandle h;
                h.span = [p, cell](const std::vector<int>& d, double u) {
                    if (d == std::vector<int>{2, 4}) return build_appendix_xxz(Appendix8x8Kind::Xxz24, p, u);
                    if (d == std::vector<int>{4, 2}) return build_appendix_xxz(Appendix8x8Kind::Xxz42, p, u);
                    if (d == std::vector<int>{2, 2}) return build_xxz_block(cell, u);
                    throw DimensionError("appendix-xxz: spans (2,4), (4,2) or (2,2)");
                };
                h.scalar = [h](double u) { return h.span({2, 4}, u); };
                return h;
            },
            {{GybeShape::inhom(2, 4, 2), 1e-10},
             {GybeShape::inhom(2, 2, 4), 1e-10},
             {GybeShape::inhom(4, 2, 2), 1e-10}}});
    }

    reg.push_back(FamilyEntry{
        "odd-xshape-33",
        "9x9 X-shaped family with the odd central sector; rotation cells at p = i",
        json{{"theta11", 0.8}, {"theta10", 0.5}, {"theta01", 1.2}, {"alpha00", 0.3},
             {"branch", 1}},
        [](const json& j) {
            const double th11 = j.value("theta11", 0.8), th10 = j.value("theta10", 0.5),
                         th01 = j.value("theta01", 1.2), a00 = j.value("alpha00", 0.3);
            const double br = j.value("branch", 1) >= 0 ? 1.0 : -1.0;
            const cplx pi_unit(0.0, br);  // p = ±i
            FamilyHandle h;
            h.scalar = [=](double u) {
                BlockMap bm;
                bm.n1 = 3;
                bm.n2 = 3;
                bm.cells[{1, 1}] = [=](double x) {
                    return build_circular_block(th11, th11, pi_unit, pi_unit, x);
                };
                bm.cells[{1, 0}] = [=](double x) {
                    return build_odd_blocks({th10, pi_unit, 0.0}, x).vector;
                };
                bm.cells[{0, 1}] = [=](double x) {
                    return build_odd_blocks({th01, pi_unit, 0.0}, x).vector;
                };
                bm.cells[{0, 0}] = [=](double x) {
                    return build_odd_blocks({0.0, 1.0, a00}, x).scalar;
                };
                return assemble_x_shaped(bm, u);
            };
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::inhom(3, 3, 3), 1e-10}}});

    reg.push_back(FamilyEntry{
        "induced-trig",
        "trig cell tensored with unit operators, the inherited equation shape",
        json{{"n1", 2}, {"n2", 3},
             {"cell", json{{"kind", "trig"}, {"gamma", 0.3}, {"beta", 0.7},
                           {"q", json{{"re", 2.0}}}, {"t", 1}, {"t1", -1}, {"t2", -1}}}},
        [](const json& j) {
            const BlockFn cell = block_from_json(j.at("cell"));
            const int n1 = j.value("n1", 2), n2 = j.value("n2", 3);
            FamilyHandle h;
            h.span = [cell, n1, n2](const std::vector<int>& d, double u) {
                if (d.size() == 2) return cell(u);
                return build_induced(cell(u), n1, n2);
            };
            h.scalar = [cell, n1, n2](double u) { return build_induced(cell(u), n1, n2); };
            return h;
        },
        {{[] {
              GybeShape s;
              s.dims = SiteDims{2, 2, 2, 2, 3};
              s.span_a = {0, 2};
              s.span_b = {1, 4};
              s.form = EqForm::InhomogeneousI;
              return s;
          }(),
          1e-10}}});

    reg.push_back(FamilyEntry{
        "pblock-trig",
        "p-block assembly, p = 2 with identical trig cells",
        json{{"n", 2}, {"k", 2},
             {"cell", json{{"kind", "trig"}, {"gamma", 0.3}, {"beta", 0.7},
                           {"q", json{{"re", 2.0}}}, {"t", 1}, {"t1", -1}, {"t2", -1}}}},
        [](const json& j) {
            const BlockFn cell = block_from_json(j.at("cell"));
            FamilyHandle h;
            h.span = [cell](const std::vector<int>& d, double u) {
                if (d.size() != 2 || d[0] % 2 != 0 || d[1] % 2 != 0)
                    throw DimensionError("pblock-trig: even two-site spans only");
                const int n = d[0] / 2, k = d[1] / 2;
                std::map<std::pair<int, int>, BlockFn> cells;
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= k; ++b) cells[{a, b}] = cell;
                return build_p_block_general(2, n, k, cells, u);
            };
            h.scalar = [h](double u) { return h.span({4, 4}, u); };
            return h;
        },
        {{GybeShape::inhom(4, 4, 4), 1e-10}, {GybeShape::inhom(4, 2, 4), 1e-10}}});

    reg.push_back(FamilyEntry{
        "second-kind-bell",
        "parameterized Bell matrix I + u K, arguments composing by (u-v)/(1-uv)",
        json{{"phi", 0.3}, {"t", 1.0}},
        [](const json& j) {
            const double phi = j.value("phi", 0.3);
            const double t = j.value("t", 1.0);
            const cplx q = std::exp(cplx(0.0, phi));
            FamilyHandle h;
            h.scalar = [q, t](double w) {
                CMatrix k(4, 4);
                k(0, 3) = q; k(1, 2) = t; k(2, 1) = -1.0 / t; k(3, 0) = -1.0 / q;
                return CMatrix::identity(4) + k * cplx(w);
            };
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::gybe(2, 2, 1, EqForm::SpectralSecondKind), 1e-11}}});

    reg.push_back(FamilyEntry{
        "factorized-trig",
        "circular two-angle cell with exponential prefactor, p >= k matrix-product relation",
        json{{"theta", 0.6}, {"epsilon", 1.1}, {"q", json{{"re", 1.7}}},
             {"t", json{{"re", 0.8}}}, {"fbar_rate", 0.35}},
        [](const json& j) {
            const cplx th = complex_from_json(j.at("theta"));
            const cplx ep = complex_from_json(j.at("epsilon"));
            const cplx q = complex_from_json(j.at("q"));
            const cplx t = complex_from_json(j.at("t"));
            const double rate = j.value("fbar_rate", 0.35);
            FamilyHandle h;
            h.fbar = [rate](double u) { return std::exp(cplx(0.0, rate * u)); };
            h.scalar = [=, fb = h.fbar](double u) {
                return build_circular_block(th, ep, q, t, u) * fb(u);
            };
            h.span = homogeneous_family(h.scalar);
            return h;
        },
        {{GybeShape::gybe(2, 2, 1, EqForm::Factorized), 1e-11}}});

    reg.push_back(FamilyEntry{
        "factorized-diag",
        "diagonal exponential cell under the p >= k relation with Fbar = 1",
        json{{"thetas", std::vector<double>{0.25, -0.4, 0.8, 0.15}}},
        [](const json& j) {
            const auto th = diag_params_from_json(j);
            FamilyHandle h;
            h.scalar = [th](double u) { return build_diag_block(th, u); };
            h.span = homogeneous_family(h.scalar);
            h.fbar = [](double) { return cplx(1.0); };
            return h;
        },
        {{GybeShape::gybe(2, 2, 1, EqForm::Factorized), 1e-12}}});

    return reg;
}

inline const std::vector<FamilyEntry>& family_registry() {
    static const std::vector<FamilyEntry> reg = make_family_registry();
    return reg;
}

inline const FamilyEntry* find_family(const std::string& id) {
    for (const FamilyEntry& f : family_registry())
        if (f.id == id) return &f;
    return nullptr;
}

inline std::vector<std::string> family_ids() {
    std::vector<std::string> out;
    for (const FamilyEntry& f : family_registry()) out.push_back(f.id);
    return out;
}

}  // namespace gybe
