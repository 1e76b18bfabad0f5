// The small spectral-parameter blocks every large solution is assembled
// from: hyperbolic and circular eight-vertex 4x4 cells, diagonal cells,
// XXZ/XX cells, the deformed (q,t) cell and the odd-sector 1x1/2x2 cells.
// All blocks are normalized so B(0) = I; exponential prefactors are
// explicit parameters.
#pragma once

#include <array>
#include <complex>
#include <utility>

#include "gybe/matrix.hpp"

namespace gybe {

// X-shaped 4x4 with given diagonal (d0..d3) and anti-diagonal (a0..a3),
// anti entries listed top to bottom: positions (0,3),(1,2),(2,1),(3,0).
inline CMatrix x_cell(const std::array<cplx, 4>& diag, const std::array<cplx, 4>& anti) {
    CMatrix m(4, 4);
    m(0, 0) = diag[0]; m(1, 1) = diag[1]; m(2, 2) = diag[2]; m(3, 3) = diag[3];
    m(0, 3) = anti[0]; m(1, 2) = anti[1]; m(2, 1) = anti[2]; m(3, 0) = anti[3];
    return m;
}

struct TrigBlockParams {
    double gamma = 0.3;
    double beta = 0.7;
    cplx q = 1.0;
    int t = 1, t1 = -1, t2 = -1;

    // the permissible sign configurations share t*t1*t2 = +1
    bool signs_valid() const { return t * t1 * t2 == 1; }
    // configurations (t,t1,1)-type solve YBE only with equal rates gamma=beta;
    // (t,-t,-1)-type are the fully two-parametric ones
    bool two_parametric() const { return t1 == -t; }
};

// hyperbolic eight-vertex cell:
//   diag (cosh gu, cosh bu, cosh bu, cosh gu)
//   anti (q sinh bu, t sinh gu, t1 sinh gu, (t2/q) sinh bu)
inline CMatrix build_trig_block(const TrigBlockParams& p, double u) {
    if (p.q == 0.0) throw ConfigError("trig block: q must be nonzero");
    const cplx cg = std::cosh(p.gamma * u), cb = std::cosh(p.beta * u);
    const cplx sg = std::sinh(p.gamma * u), sb = std::sinh(p.beta * u);
    return x_cell({cg, cb, cb, cg},
                  {p.q * sb, cplx(p.t) * sg, cplx(p.t1) * sg, (cplx(p.t2) / p.q) * sb});
}

// circular variant (cos/sin, two angles, complex deformations); this is the
// trigonometric two-parametric cell with anti-diagonal (q s_th, t s_ep, -s_ep/t, -s_th/q)
inline CMatrix build_circular_block(cplx theta, cplx epsilon, cplx q, cplx t, double u) {
    if (q == 0.0 || t == 0.0) throw ConfigError("circular block: q,t must be nonzero");
    const cplx ct = std::cos(theta * u), ce = std::cos(epsilon * u);
    const cplx st = std::sin(theta * u), se = std::sin(epsilon * u);
    return x_cell({ct, ce, ce, ct}, {q * st, t * se, -se / t, -st / q});
}

inline CMatrix build_diag_block(const std::array<double, 4>& thetas, double u) {
    CMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) m(i, i) = std::exp(cplx(thetas[i] * u));
    return m;
}

struct XxzBlockParams {
    double u0 = 1.1;       // crossing parameter, sinh(u0) != 0
    double gamma = 0.0;    // asymmetry of the two center entries
    int variant = +1;      // +1: XXZ, -1: XX in a transverse field
    double a = 1.0;        // argument rate
    double overall_alpha = 0.0;  // exponential prefactor rate
};

// diag (sinh(au+u0)/sinh u0, 1, 1, sinh(u0 ± au)/sinh u0), centers
// e^{±gamma} sinh(au)/sinh u0, zero corners; scaled by e^{alpha u}
inline CMatrix build_xxz_block(const XxzBlockParams& p, double u) {
    const double s0 = std::sinh(p.u0);
    if (std::abs(s0) < 1e-12) throw SingularError("xxz block: sinh(u0) = 0");
    const double au = p.a * u;
    CMatrix m(4, 4);
    m(0, 0) = std::sinh(au + p.u0) / s0;
    m(1, 1) = 1.0;
    m(2, 2) = 1.0;
    m(3, 3) = std::sinh(p.u0 + p.variant * au) / s0;
    m(1, 2) = std::exp(p.gamma) * std::sinh(au) / s0;
    m(2, 1) = std::exp(-p.gamma) * std::sinh(au) / s0;
    return m * std::exp(cplx(p.overall_alpha * u));
}

struct DeformedBlockParams {
    double alpha0 = 0.4;
    double alphax = 0.9;
    cplx q = 1.0;
    cplx t = 1.0;

    // partner constants appearing on the other side of the mixed relation
    DeformedBlockParams partner(cplx qp) const {
        DeformedBlockParams r;
        r.alpha0 = alphax; r.alphax = alpha0;
        r.q = qp; r.t = q / (qp * t);
        return r;
    }
};

// diag (cosh a0u, cosh axu, cosh axu, cosh a0u),
// anti (q sinh axu, t sinh a0u, -sinh(a0u)/t, -sinh(axu)/q)
inline CMatrix build_deformed_block(const DeformedBlockParams& p, double u) {
    if (p.q == 0.0 || p.t == 0.0) throw ConfigError("deformed block: q,t must be nonzero");
    const cplx c0 = std::cosh(p.alpha0 * u), cx = std::cosh(p.alphax * u);
    const cplx s0 = std::sinh(p.alpha0 * u), sx = std::sinh(p.alphax * u);
    return x_cell({c0, cx, cx, c0}, {p.q * sx, p.t * s0, -s0 / p.t, -sx / p.q});
}

struct OddBlockParams {
    cplx theta = 1.0;   // rate of the 2x2 rotation, may be imaginary
    cplx p = 1.0;       // nonzero deformation, may be imaginary
    double alpha = 0.0; // rate of the 1x1 scalar cell
};

struct OddBlocks {
    CMatrix scalar;  // 1x1
    CMatrix vector;  // 2x2
};

// scalar cell e^{alpha u}; 2x2 cell [[cos th u, p sin th u], [-(1/p) sin th u, cos th u]]
inline OddBlocks build_odd_blocks(const OddBlockParams& prm, double u) {
    if (prm.p == 0.0) throw ConfigError("odd block: p must be nonzero");
    OddBlocks b{CMatrix(1, 1), CMatrix(2, 2)};
    b.scalar(0, 0) = std::exp(cplx(prm.alpha * u));
    const cplx c = std::cos(prm.theta * u), s = std::sin(prm.theta * u);
    b.vector(0, 0) = c; b.vector(0, 1) = prm.p * s;
    b.vector(1, 0) = -s / prm.p; b.vector(1, 1) = c;
    return b;
}

}  // namespace gybe
