// Transfer matrices on cyclic chains via the literal index contraction,
// commutators, logarithmic-derivative Hamiltonian extraction, closed-form
// comparator Hamiltonians and small toric partition functions.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "gybe/matrix.hpp"
#include "gybe/permutations.hpp"

namespace gybe {

struct ChainSpec {
    int n_sites = 2;
    int site_dim = 2;
    std::function<CMatrix(double)> family;  // d^2 x d^2 local operator

    long total_dim() const {
        long t = 1;
        for (int i = 0; i < n_sites; ++i) t *= site_dim;
        return t;
    }
    void validate() const {
        if (n_sites < 2) throw ConfigError("chain: at least 2 sites");
        if (total_dim() > 4096) throw ConfigError("chain: dimension guard exceeded (> 4096)");
    }
};

// tau^{j1..jN}_{i1..iN} = sum_k R_{kN i1}^{jN k1} R_{k1 i2}^{j1 k2} ...
// Each element is the trace of a product of d x d auxiliary matrices
// A[j,i][k,k'] = R_{k i}^{j k'}; tau(0) is the cyclic shift by two sites.
inline CMatrix transfer_matrix(const ChainSpec& chain, double u) {
    chain.validate();
    const int d = chain.site_dim, N = chain.n_sites;
    const CMatrix R = chain.family(u);
    if (R.rows() != static_cast<std::size_t>(d) * d || !R.square())
        throw DimensionError("transfer_matrix: family must yield d^2 x d^2 operators");

    // aux[j][i] is a d x d matrix over (k, k')
    std::vector<CMatrix> aux(static_cast<std::size_t>(d) * d, CMatrix(d, d));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                for (int kp = 0; kp < d; ++kp)
                    aux[j * d + i](k, kp) = R(j * d + kp, k * d + i);

    const long D = chain.total_dim();
    CMatrix tau(D, D);
    std::vector<int> js(N), is(N);
    for (long jj = 0; jj < D; ++jj) {
        long rem = jj;
        for (int r = N - 1; r >= 0; --r) { js[r] = rem % d; rem /= d; }
        for (long ii = 0; ii < D; ++ii) {
            rem = ii;
            for (int r = N - 1; r >= 0; --r) { is[r] = rem % d; rem /= d; }
            CMatrix prod = aux[js[N - 1] * d + is[0]];
            for (int r = 1; r < N; ++r) prod = prod * aux[js[r - 1] * d + is[r]];
            tau(jj, ii) = prod.trace();
        }
    }
    return tau;
}

inline double commutator_norm(const CMatrix& a, const CMatrix& b) {
    return (a * b - b * a).frobenius();
}

struct HamiltonianExtract {
    CMatrix h;
    double tau0_condition = 0.0;
    double commutator_with_tau = 0.0;  // ||[H, tau(v)]||_F at a probe point
};

// H = tau(0)^{-1} (tau(h) - tau(-h)) / 2h, the logarithmic derivative at 0
inline HamiltonianExtract hamiltonian_extract(const ChainSpec& chain, double fd_step = 1e-5,
                                              double probe_v = 0.37) {
    const CMatrix t0 = transfer_matrix(chain, 0.0);
    const double cond = condition_estimate(t0);
    if (cond > 1e8) throw SingularError("hamiltonian_extract: tau(0) is ill conditioned");
    const CMatrix dtau =
        (transfer_matrix(chain, fd_step) - transfer_matrix(chain, -fd_step)) *
        cplx(1.0 / (2.0 * fd_step));
    HamiltonianExtract out;
    out.h = solve(t0, dtau);
    out.tau0_condition = cond;
    out.commutator_with_tau = commutator_norm(out.h, transfer_matrix(chain, probe_v));
    return out;
}

// trace(tau(u)^n_rows), toric boundary
inline cplx partition_function(const ChainSpec& chain, int n_rows, double u) {
    if (n_rows < 1) throw ConfigError("partition_function: n_rows must be >= 1");
    return matrix_power(transfer_matrix(chain, u), static_cast<unsigned>(n_rows)).trace();
}

// ---- closed-form comparator Hamiltonians ----

struct HamiltonianSpec {
    std::array<double, 3> couplings{1.0, 1.0, 1.0};  // Jx, Jy, Jz
    int length = 2;                                   // number of chain sites
    std::vector<int> spin_set_sizes;                  // per-site count of 1/2 spins
};

enum class HamiltonianKind { XyzSets, H44, H2222 };

namespace detail {

// composite spin S^a = sum over the site's spin set of one-qubit sigma^a
inline CMatrix composite_spin(char axis, int n_spins) {
    const int dim = 1 << n_spins;
    CMatrix out(dim, dim);
    for (int k = 0; k < n_spins; ++k) {
        SiteDims dims(std::vector<int>(n_spins, 2));
        out = out + embed_operator(pauli(axis), dims, k);
    }
    return out;
}

}  // namespace detail

// xyz-sets: sum_i sum_a J_a S_i^a S_{i+1}^a on the cyclic chain of sites
// with 2^{spin_set_size} dimensions each
inline CMatrix closed_form_hamiltonian(const HamiltonianSpec& spec, HamiltonianKind kind) {
    const char axes[3] = {'x', 'y', 'z'};
    if (kind == HamiltonianKind::XyzSets) {
        if (static_cast<int>(spec.spin_set_sizes.size()) != spec.length)
            throw ConfigError("xyz-sets: one spin-set size per site required");
        std::vector<int> site_dims;
        long total = 1;
        for (int n : spec.spin_set_sizes) {
            site_dims.push_back(1 << n);
            total *= (1 << n);
        }
        if (total > 4096) throw ConfigError("xyz-sets: dimension guard exceeded");
        SiteDims dims(site_dims);
        CMatrix h(total, total);
        for (int i = 0; i < spec.length; ++i) {
            const int j = (i + 1) % spec.length;
            for (int a = 0; a < 3; ++a) {
                const CMatrix si =
                    embed_operator(detail::composite_spin(axes[a], spec.spin_set_sizes[i]), dims, i);
                const CMatrix sj =
                    embed_operator(detail::composite_spin(axes[a], spec.spin_set_sizes[j]), dims, j);
                h = h + si * sj * cplx(spec.couplings[a]);
            }
        }
        return h;
    }
    if (kind == HamiltonianKind::H44) {
        // chain of 4-dimensional sites with the displayed two-site density
        const int L = spec.length;
        long total = 1;
        for (int i = 0; i < L; ++i) total *= 4;
        if (total > 4096) throw ConfigError("h44: dimension guard exceeded");
        SiteDims dims(std::vector<int>(L, 4));
        const CMatrix hloc = h44_local_density();
        CMatrix h(total, total);
        for (int i = 0; i < L; ++i) {
            const int j = (i + 1) % L;
            if (j == i + 1) {
                h = h + embed_operator(hloc, dims, i);
            } else {
                // wrap term: swap the two sites, apply, swap back
                CMatrix swap(16, 16);
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) swap(b * 4 + a, a * 4 + b) = 1.0;
                CMatrix wrapped = swap * hloc * swap;
                // acts on (site L-1, site 0): embed on the last two positions
                // after rotating the chain is equivalent to embedding the
                // swapped density on sites (j, i) = (0, L-1); with L = 2 the
                // pair is adjacent either way
                if (L == 2) {
                    h = h + embed_operator(wrapped, dims, 0);
                } else {
                    // build the wrap term explicitly: operator on sites (L-1, 0)
                    const long mid = total / 16;
                    CMatrix term(total, total);
                    for (int a1 = 0; a1 < 4; ++a1)
                        for (int b1 = 0; b1 < 4; ++b1)
                            for (int a2 = 0; a2 < 4; ++a2)
                                for (int b2 = 0; b2 < 4; ++b2) {
                                    const cplx v = hloc(a1 * 4 + b1, a2 * 4 + b2);
                                    if (v == 0.0) continue;
                                    for (long m = 0; m < mid; ++m) {
                                        const long row = (b1 * mid + m) * 4 + a1;
                                        const long col = (b2 * mid + m) * 4 + a2;
                                        term(row, col) += v;
                                    }
                                }
                    h = h + term;
                }
            }
        }
        return h;
    }
    // H2222: the bracketed 16x16 local operator of the fractional family
    return h2222_local_density(1.0, cplx(0, 1), cplx(0, 1));
}

// conserved charge of the h44 chain: product over sites of sigma_z ⊗ sigma_z
inline CMatrix h44_conserved_charge(int length) {
    CMatrix q = CMatrix::identity(1);
    const CMatrix zz = kron(pauli('z'), pauli('z'));
    for (int i = 0; i < length; ++i) q = kron(q, zz);
    return q;
}

}  // namespace gybe
