// JSON formats shared repo-wide: matrices, block parameters, block maps,
// verification reports and search catalogs.
#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "gybe/blocks.hpp"
#include "gybe/matrix.hpp"
#include "gybe/permutations.hpp"
#include "gybe/verify.hpp"
#include "gybe/xshape.hpp"

namespace gybe {

using json = nlohmann::json;

// {"rows": n, "cols": m, "re": [...], "im": [...]}, row-major
inline json matrix_to_json(const CMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    std::vector<double> re, im;
    re.reserve(m.data().size());
    im.reserve(m.data().size());
    for (const cplx& v : m.data()) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    j["re"] = re;
    j["im"] = im;
    return j;
}

inline CMatrix matrix_from_json(const json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != rows * cols || im.size() != rows * cols)
        throw ConfigError("matrix json: re/im length must equal rows*cols");
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < re.size(); ++i) m.data()[i] = cplx(re[i], im[i]);
    if (!m.is_finite()) throw ConfigError("matrix json: entries must be finite");
    return m;
}

inline json complex_to_json(cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }
inline cplx complex_from_json(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    return cplx(j.at("re").get<double>(), j.value("im", 0.0));
}

// block parameter objects, tagged by "kind"
inline json block_params_to_json(const TrigBlockParams& p) {
    return json{{"kind", "trig"},   {"gamma", p.gamma}, {"beta", p.beta},
                {"q", complex_to_json(p.q)}, {"t", p.t}, {"t1", p.t1}, {"t2", p.t2}};
}
inline json block_params_to_json(const XxzBlockParams& p) {
    return json{{"kind", "xxz"},     {"u0", p.u0},
                {"gamma", p.gamma},  {"variant", p.variant == 1 ? "plus" : "minus"},
                {"a", p.a},          {"overall_alpha", p.overall_alpha}};
}
inline json block_params_to_json(const DeformedBlockParams& p) {
    return json{{"kind", "deformed"}, {"alpha0", p.alpha0}, {"alphax", p.alphax},
                {"q", complex_to_json(p.q)}, {"t", complex_to_json(p.t)}};
}
inline json block_params_to_json(const OddBlockParams& p) {
    return json{{"kind", "odd"},  {"theta", complex_to_json(p.theta)},
                {"p", complex_to_json(p.p)}, {"alpha", p.alpha}};
}

inline TrigBlockParams trig_params_from_json(const json& j) {
    TrigBlockParams p;
    p.gamma = j.value("gamma", p.gamma);
    p.beta = j.value("beta", p.beta);
    if (j.contains("q")) p.q = complex_from_json(j.at("q"));
    p.t = j.value("t", p.t);
    p.t1 = j.value("t1", p.t1);
    p.t2 = j.value("t2", p.t2);
    return p;
}
inline XxzBlockParams xxz_params_from_json(const json& j) {
    XxzBlockParams p;
    p.u0 = j.value("u0", p.u0);
    p.gamma = j.value("gamma", p.gamma);
    if (j.contains("variant")) p.variant = j.at("variant").get<std::string>() == "minus" ? -1 : +1;
    p.a = j.value("a", p.a);
    p.overall_alpha = j.value("overall_alpha", p.overall_alpha);
    return p;
}
inline DeformedBlockParams deformed_params_from_json(const json& j) {
    DeformedBlockParams p;
    p.alpha0 = j.value("alpha0", p.alpha0);
    p.alphax = j.value("alphax", p.alphax);
    if (j.contains("q")) p.q = complex_from_json(j.at("q"));
    if (j.contains("t")) p.t = complex_from_json(j.at("t"));
    return p;
}
inline OddBlockParams odd_params_from_json(const json& j) {
    OddBlockParams p;
    if (j.contains("theta")) p.theta = complex_from_json(j.at("theta"));
    if (j.contains("p")) p.p = complex_from_json(j.at("p"));
    p.alpha = j.value("alpha", p.alpha);
    return p;
}

inline std::array<double, 4> diag_params_from_json(const json& j) {
    std::array<double, 4> th{0, 0, 0, 0};
    if (j.contains("thetas")) {
        const auto v = j.at("thetas").get<std::vector<double>>();
        if (v.size() != 4) throw ConfigError("diag block: thetas must have 4 entries");
        for (int i = 0; i < 4; ++i) th[i] = v[i];
    }
    return th;
}

// cell builder from a tagged parameter object
inline BlockFn block_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "trig") {
        const TrigBlockParams p = trig_params_from_json(j);
        return [p](double u) { return build_trig_block(p, u); };
    }
    if (kind == "circular") {
        const cplx th = complex_from_json(j.at("theta"));
        const cplx ep = j.contains("epsilon") ? complex_from_json(j.at("epsilon")) : th;
        const cplx q = j.contains("q") ? complex_from_json(j.at("q")) : cplx(1.0);
        const cplx t = j.contains("t") ? complex_from_json(j.at("t")) : cplx(1.0);
        return [=](double u) { return build_circular_block(th, ep, q, t, u); };
    }
    if (kind == "diag") {
        const auto th = diag_params_from_json(j);
        return [th](double u) { return build_diag_block(th, u); };
    }
    if (kind == "xxz") {
        const XxzBlockParams p = xxz_params_from_json(j);
        return [p](double u) { return build_xxz_block(p, u); };
    }
    if (kind == "deformed") {
        const DeformedBlockParams p = deformed_params_from_json(j);
        return [p](double u) { return build_deformed_block(p, u); };
    }
    if (kind == "odd-vector") {
        const OddBlockParams p = odd_params_from_json(j);
        return [p](double u) { return build_odd_blocks(p, u).vector; };
    }
    if (kind == "odd-scalar") {
        const OddBlockParams p = odd_params_from_json(j);
        return [p](double u) { return build_odd_blocks(p, u).scalar; };
    }
    throw ConfigError("unknown block kind '" + kind + "'");
}

// {"n1":., "n2":., "cells":[{"i":., "j":., "gamma":., "alpha":., "block":{...}}]}
inline BlockMap block_map_from_json(const json& j) {
    BlockMap bm;
    bm.n1 = j.at("n1").get<int>();
    bm.n2 = j.at("n2").get<int>();
    for (const json& cj : j.at("cells")) {
        const std::pair<int, int> key{cj.at("i").get<int>(), cj.at("j").get<int>()};
        bm.cells[key] = block_from_json(cj.at("block"));
        if (cj.contains("gamma")) bm.gamma[key] = cj.at("gamma").get<double>();
        if (cj.contains("alpha")) bm.alpha[key] = cj.at("alpha").get<double>();
    }
    return bm;
}

inline json report_to_json(const VerificationReport& r) {
    return json{{"equation", r.equation},
                {"samples", r.samples},
                {"max_abs_residual", r.max_abs_residual},
                {"frobenius_residual", r.frobenius_residual},
                {"tolerance", r.tolerance},
                {"pass", r.pass},
                {"seed", r.seed}};
}

inline json catalog_to_json(const ParityCatalog& c) {
    json arr = json::array();
    for (const CatalogEntry& e : c.passing)
        arr.push_back(json{{"assignment", e.assignment},
                           {"target", e.target},
                           {"max_residual", e.max_residual},
                           {"samples", e.samples}});
    return json{{"passing", arr}, {"tested", c.tested}, {"seed", c.seed}, {"tol", c.tol}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

}  // namespace gybe
