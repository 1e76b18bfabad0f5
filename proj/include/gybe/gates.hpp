// Unitarized two-qubit gates, their action on the product basis, the
// concurrence of the resulting states and the two-frequency time schedule.
#pragma once

#include <array>
#include <cmath>

#include "gybe/blocks.hpp"
#include "gybe/matrix.hpp"

namespace gybe {

struct GateParams {
    double theta_u = 0.0;    // rotation angle of the (|++>,|-->) pair
    double epsilon_u = 0.0;  // rotation angle of the (|+->,|-+>) pair
    double alpha_phase = 0.0;
};

// sqrt(2)/sqrt(cosh 2gu + cosh 2bu) * R(u) at signs (1,-1,-1), q = e^{i alpha}.
// The recovered angles satisfy cos/sin identities by construction
// (branch-safe two-argument arctangent).
inline std::pair<CMatrix, GateParams> unitarize(double gamma, double beta, double u,
                                                double alpha_phase) {
    TrigBlockParams p;
    p.gamma = gamma;
    p.beta = beta;
    p.q = std::exp(cplx(0.0, alpha_phase));
    p.t = 1; p.t1 = -1; p.t2 = -1;
    const double denom = std::sqrt(std::cosh(2 * gamma * u) + std::cosh(2 * beta * u));
    const CMatrix gate = build_trig_block(p, u) * cplx(std::sqrt(2.0) / denom);
    GateParams gp;
    gp.alpha_phase = alpha_phase;
    gp.theta_u = std::atan2(std::sqrt(2.0) * std::sinh(beta * u) / denom,
                            std::sqrt(2.0) * std::cosh(gamma * u) / denom);
    gp.epsilon_u = std::atan2(std::sqrt(2.0) * std::sinh(gamma * u) / denom,
                              std::sqrt(2.0) * std::cosh(beta * u) / denom);
    return {gate, gp};
}

struct TwoQubitState {
    std::array<cplx, 4> c{};   // coefficients on (|++>,|+->,|-+>,|-->)
    bool gate_unitary = true;  // false flags a non-unitary input gate

    double norm() const {
        double s = 0.0;
        for (const cplx& v : c) s += std::norm(v);
        return std::sqrt(s);
    }
};

// Image of the basis ket under the gate, read off row by row: the gate
// display multiplies the matrix into the column of kets, so the state fed
// in as basis vector i comes out with coefficients gate(i, :).
inline TwoQubitState apply_gate(const CMatrix& gate, int basis_index) {
    if (gate.rows() != 4 || gate.cols() != 4) throw DimensionError("apply_gate: 4x4 gate required");
    if (basis_index < 0 || basis_index > 3) throw ConfigError("apply_gate: basis index 0..3");
    TwoQubitState s;
    for (int j = 0; j < 4; ++j) s.c[j] = gate(basis_index, j);
    const Residual unit = residual_norm(gate * gate.dagger(), CMatrix::identity(4));
    s.gate_unitary = unit.max_abs < 1e-10;
    return s;
}

// 2|ad - bc| on the normalized coefficients; agrees with the spin-flip
// definition on the X-shaped outputs produced here
inline double concurrence(const TwoQubitState& s) {
    const double n = s.norm();
    if (n < 1e-300) throw SingularError("concurrence: zero state");
    const double scale = 1.0 / (n * n);
    return 2.0 * std::abs(s.c[0] * s.c[3] - s.c[1] * s.c[2]) * scale;
}

// independent evolution of the two state pairs: eps = (pi/4) t,
// theta = (pi/4)(t-1); odd integers decouple one pair and maximally
// entangle the other
inline GateParams time_schedule(double t) {
    GateParams gp;
    gp.epsilon_u = (M_PI / 4.0) * t;
    gp.theta_u = (M_PI / 4.0) * (t - 1.0);
    return gp;
}

// gate built directly from schedule angles (alpha = 0)
inline CMatrix gate_from_params(const GateParams& gp) {
    const cplx q = std::exp(cplx(0.0, gp.alpha_phase));
    CMatrix g(4, 4);
    g(0, 0) = std::cos(gp.theta_u);  g(0, 3) = q * std::sin(gp.theta_u);
    g(1, 1) = std::cos(gp.epsilon_u); g(1, 2) = std::sin(gp.epsilon_u);
    g(2, 1) = -std::sin(gp.epsilon_u); g(2, 2) = std::cos(gp.epsilon_u);
    g(3, 0) = -std::sin(gp.theta_u) / q; g(3, 3) = std::cos(gp.theta_u);
    return g;
}

}  // namespace gybe
