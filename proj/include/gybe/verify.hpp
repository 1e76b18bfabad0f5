// Numerical residual evaluation of every equation variant: constant braid,
// spectral difference form, the two inhomogeneous extensions, the
// second-kind (relativistic) composition, the factorized p>=k relation and
// unitarity defects. Sweeps draw seeded samples and parallelize over them.
#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gybe/matrix.hpp"
#include "gybe/rng.hpp"

namespace gybe {

enum class EqForm {
    ConstantBraid,
    SpectralDifference,
    SpectralSecondKind,
    InhomogeneousI,
    InhomogeneousII,
    Factorized,
};

inline std::string to_string(EqForm f) {
    switch (f) {
        case EqForm::ConstantBraid: return "constant-braid";
        case EqForm::SpectralDifference: return "spectral-difference";
        case EqForm::SpectralSecondKind: return "spectral-second-kind";
        case EqForm::InhomogeneousI: return "inhomogeneous-i";
        case EqForm::InhomogeneousII: return "inhomogeneous-ii";
        case EqForm::Factorized: return "factorized";
    }
    return "?";
}

// which equation variant is being verified: a chain of site dimensions and
// the spans of the two alternating operators
struct GybeShape {
    SiteDims dims;
    std::pair<int, int> span_a{0, 2};  // start, length
    std::pair<int, int> span_b{1, 2};
    EqForm form = EqForm::SpectralDifference;

    // homogeneous (d,k,p): k+p sites of dimension d, second operator
    // shifted by p
    static GybeShape gybe(int d, int k, int p, EqForm form = EqForm::SpectralDifference) {
        GybeShape s;
        s.dims = SiteDims(std::vector<int>(k + p, d));
        s.span_a = {0, k};
        s.span_b = {p, k};
        s.form = form;
        return s;
    }
    // three-site inhomogeneous chain [N1,N2,N3]
    static GybeShape inhom(int n1, int n2, int n3) {
        GybeShape s;
        s.dims = SiteDims{n1, n2, n3};
        s.span_a = {0, 2};
        s.span_b = {1, 2};
        s.form = EqForm::InhomogeneousII;
        return s;
    }

    std::vector<int> span_dims(const std::pair<int, int>& sp) const {
        std::vector<int> out;
        for (int i = sp.first; i < sp.first + sp.second; ++i) out.push_back(dims[i]);
        return out;
    }
    long span_total(const std::pair<int, int>& sp) const {
        long t = 1;
        for (int d : span_dims(sp)) t *= d;
        return t;
    }
    void validate() const {
        auto fits = [&](const std::pair<int, int>& sp) {
            return sp.first >= 0 && sp.second >= 1 &&
                   sp.first + sp.second <= static_cast<int>(dims.size());
        };
        if (!fits(span_a) || !fits(span_b)) throw DimensionError("GybeShape: spans must fit dims");
    }
    std::string id() const {
        std::string s = to_string(form) + " dims=";
        for (std::size_t i = 0; i < dims.size(); ++i)
            s += (i ? "," : "") + std::to_string(dims[i]);
        s += " spans=(" + std::to_string(span_a.first) + "+" + std::to_string(span_a.second) +
             ")(" + std::to_string(span_b.first) + "+" + std::to_string(span_b.second) + ")";
        return s;
    }
};

struct VerificationReport {
    std::string equation;
    int samples = 0;
    double max_abs_residual = 0.0;
    double frobenius_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;

    void finish(double tol) {
        tolerance = tol;
        pass = max_abs_residual <= tol;
    }
};

// family handle queried per span: receives the site dimensions the operator
// must cover and the spectral argument
using SpanFamily = std::function<CMatrix(const std::vector<int>&, double)>;

inline SpanFamily homogeneous_family(std::function<CMatrix(double)> f) {
    return [f = std::move(f)](const std::vector<int>&, double u) { return f(u); };
}

namespace detail {

inline Residual triple_product_residual(const GybeShape& shape, const CMatrix& a_uv,
                                        const CMatrix& b_u, const CMatrix& a_v,
                                        const CMatrix& b_v, const CMatrix& a_u,
                                        const CMatrix& b_uv) {
    const auto& d = shape.dims;
    const CMatrix L = embed_operator(a_uv, d, shape.span_a.first) *
                      embed_operator(b_u, d, shape.span_b.first) *
                      embed_operator(a_v, d, shape.span_a.first);
    const CMatrix R = embed_operator(b_v, d, shape.span_b.first) *
                      embed_operator(a_u, d, shape.span_a.first) *
                      embed_operator(b_uv, d, shape.span_b.first);
    return residual_norm(L, R);
}

}  // namespace detail

// (R ⊗ I)(I ⊗ R)(R ⊗ I) vs mirror, one constant operator
inline VerificationReport verify_constant(const CMatrix& r, const GybeShape& shape,
                                          double tol = 1e-10) {
    shape.validate();
    if (static_cast<long>(r.rows()) != shape.span_total(shape.span_a))
        throw DimensionError("verify_constant: operator does not match span");
    const Residual res = detail::triple_product_residual(shape, r, r, r, r, r, r);
    VerificationReport rep;
    rep.equation = "constant-braid " + shape.id();
    rep.samples = 1;
    rep.max_abs_residual = res.max_abs;
    rep.frobenius_residual = res.frobenius;
    rep.finish(tol);
    return rep;
}

// difference form A(u-v) B(u) A(v) = B(v) A(u) B(u-v)
inline VerificationReport verify_spectral(const SpanFamily& family, const GybeShape& shape,
                                          double u, double v, double tol = 1e-10) {
    shape.validate();
    const auto da = shape.span_dims(shape.span_a);
    const auto db = shape.span_dims(shape.span_b);
    const Residual res = detail::triple_product_residual(
        shape, family(da, u - v), family(db, u), family(da, v), family(db, v), family(da, u),
        family(db, u - v));
    VerificationReport rep;
    rep.equation = shape.id();
    rep.samples = 1;
    rep.max_abs_residual = res.max_abs;
    rep.frobenius_residual = res.frobenius;
    rep.finish(tol);
    return rep;
}

// the full inhomogeneous set of a [N1,N2,N3] triple: the base equation plus,
// when full_set, the two cyclic companions needed for transfer-matrix
// commutativity
inline std::vector<VerificationReport> verify_inhomogeneous(const SpanFamily& family,
                                                            const std::array<int, 3>& n,
                                                            double u, double v, bool full_set,
                                                            double tol = 1e-10) {
    std::vector<VerificationReport> out;
    const std::array<std::array<int, 3>, 3> cycles = {{{n[0], n[1], n[2]},
                                                       {n[1], n[2], n[0]},
                                                       {n[2], n[0], n[1]}}};
    const char* names[3] = {"gybe123", "gybe231", "gybe312"};
    const int count = full_set ? 3 : 1;
    for (int c = 0; c < count; ++c) {
        const GybeShape shape = GybeShape::inhom(cycles[c][0], cycles[c][1], cycles[c][2]);
        VerificationReport rep = verify_spectral(family, shape, u, v, tol);
        rep.equation = std::string(names[c]) + " " + rep.equation;
        out.push_back(std::move(rep));
    }
    return out;
}

// second-kind composition: arguments add by (u-v)/(1-uv)
inline VerificationReport verify_second_kind(const std::function<CMatrix(double)>& family,
                                             double ubar, double vbar, double tol = 1e-10) {
    const double denom = 1.0 - ubar * vbar;
    if (std::abs(denom) <= 1e-9)
        throw SingularError("second-kind: pole of the addition rule, 1 - u*v ~ 0");
    const double wbar = (ubar - vbar) / denom;
    const CMatrix r = family(wbar);
    GybeShape shape = GybeShape::gybe(2, 2, 1, EqForm::SpectralSecondKind);
    const Residual res = detail::triple_product_residual(shape, r, family(ubar), family(vbar),
                                                         family(vbar), family(ubar), r);
    VerificationReport rep;
    rep.equation = "second-kind " + shape.id();
    rep.samples = 1;
    rep.max_abs_residual = res.max_abs;
    rep.frobenius_residual = res.frobenius;
    rep.finish(tol);
    return rep;
}

// p>=k factorized relation: R(v) R(u-v) = F(u,v) R(u) with
// F(u,v) = Fb(u-v) Fb(v) / Fb(u)
inline VerificationReport verify_factorized(const std::function<CMatrix(double)>& family,
                                            const std::function<cplx(double)>& fbar, double u,
                                            double v, double tol = 1e-10) {
    const cplx fu = fbar(u);
    if (std::abs(fu) < 1e-12) throw SingularError("factorized: Fbar(u) = 0");
    const cplx F = fbar(u - v) * fbar(v) / fu;
    const Residual res = residual_norm(family(v) * family(u - v), family(u) * F);
    VerificationReport rep;
    rep.equation = "factorized p>=k";
    rep.samples = 1;
    rep.max_abs_residual = res.max_abs;
    rep.frobenius_residual = res.frobenius;
    rep.finish(tol);
    return rep;
}

// ||R R† - I|| after optional normalization
inline VerificationReport verify_unitary(const CMatrix& r, double normalization = 1.0,
                                         double tol = 1e-10) {
    if (!r.square()) throw DimensionError("verify_unitary: square matrix required");
    if (normalization == 0.0) throw SingularError("verify_unitary: zero normalization");
    const CMatrix rn = r * cplx(normalization);
    const Residual res = residual_norm(rn * rn.dagger(), CMatrix::identity(r.rows()));
    VerificationReport rep;
    rep.equation = "unitarity";
    rep.samples = 1;
    rep.max_abs_residual = res.max_abs;
    rep.frobenius_residual = res.frobenius;
    rep.finish(tol);
    return rep;
}

// ---- seeded sweeps ----

struct SweepSpec {
    SpanFamily family;
    GybeShape shape;
    int n_samples = 50;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    // used by the special forms
    std::function<CMatrix(double)> scalar_family;
    std::function<cplx(double)> fbar;
};

inline int thread_budget() {
    if (const char* env = std::getenv("GYBE_FORGE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// draws all samples up front from the seed, evaluates them (in parallel when
// worthwhile) and aggregates the max residuals; identical seeds give
// identical reports
inline VerificationReport sweep(const SweepSpec& spec) {
    if (spec.n_samples < 1) throw ConfigError("sweep: n_samples must be >= 1");
    Rng rng(spec.seed);
    std::vector<std::pair<double, double>> pts(spec.n_samples);
    for (auto& p : pts) {
        p.first = rng.uniform(-1, 1);
        p.second = rng.uniform(-1, 1);
    }

    auto eval_one = [&](const std::pair<double, double>& p) -> Residual {
        VerificationReport r;
        switch (spec.shape.form) {
            case EqForm::SpectralSecondKind: {
                // map draws into the pole-free disc
                const double ub = 0.8 * p.first, vb = 0.8 * p.second;
                r = verify_second_kind(spec.scalar_family, ub, vb, spec.tol);
                break;
            }
            case EqForm::Factorized:
                r = verify_factorized(spec.scalar_family, spec.fbar, p.first, p.second, spec.tol);
                break;
            case EqForm::ConstantBraid:
                r = verify_constant(spec.family(spec.shape.span_dims(spec.shape.span_a), 0.0),
                                    spec.shape, spec.tol);
                break;
            default:
                r = verify_spectral(spec.family, spec.shape, p.first, p.second, spec.tol);
        }
        return {r.max_abs_residual, r.frobenius_residual};
    };

    std::vector<Residual> results(pts.size());
    const int threads = std::min<int>(thread_budget(), static_cast<int>(pts.size()));
    if (threads > 1 && spec.shape.dims.total() >= 16) {
        std::vector<std::thread> pool;
        std::size_t chunk = (pts.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk, hi = std::min(pts.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) results[i] = eval_one(pts[i]);
            });
        }
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) results[i] = eval_one(pts[i]);
    }

    VerificationReport rep;
    rep.equation = spec.shape.id();
    rep.samples = spec.n_samples;
    rep.seed = spec.seed;
    for (const Residual& r : results) {
        rep.max_abs_residual = std::max(rep.max_abs_residual, r.max_abs);
        rep.frobenius_residual = std::max(rep.frobenius_residual, r.frobenius);
    }
    rep.finish(spec.tol);
    return rep;
}

}  // namespace gybe
