#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "gybe/blocks.hpp"
#include "gybe/integrability.hpp"
#include "gybe/permutations.hpp"
#include "gybe/rng.hpp"

using namespace gybe;

namespace {

ChainSpec trig_chain(int sites) {
    ChainSpec c;
    c.n_sites = sites;
    c.site_dim = 2;
    c.family = [](double u) { return build_trig_block({0.3, 0.7, cplx(2.0), 1, -1, -1}, u); };
    return c;
}

ChainSpec r44_chain(int sites) {
    ChainSpec c;
    c.n_sites = sites;
    c.site_dim = 4;
    c.family = [](double u) { return build_r44_eps(1, 1, 1, u); };
    return c;
}

// independent eigenvalue-power-sum oracle
cplx eigen_power_sum(const CMatrix& m, int n) {
    Eigen::MatrixXcd em(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) em(i, j) = m(i, j);
    const Eigen::VectorXcd lam = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(em, false).eigenvalues();
    cplx sum = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) sum += std::pow(lam(i), n);
    return sum;
}

// direct contraction of tr(tau(u)) without building tau: closes the j = i
// indices of the definition
cplx trace_oracle(const ChainSpec& chain, double u) {
    const int d = chain.site_dim, N = chain.n_sites;
    const CMatrix R = chain.family(u);
    std::vector<int> is(N), ks(N);
    cplx total = 0.0;
    const long D = chain.total_dim();
    for (long ii = 0; ii < D; ++ii) {
        long rem = ii;
        for (int r = N - 1; r >= 0; --r) { is[r] = rem % d; rem /= d; }
        for (long kk = 0; kk < D; ++kk) {
            rem = kk;
            for (int r = N - 1; r >= 0; --r) { ks[r] = rem % d; rem /= d; }
            cplx prod = 1.0;
            for (int r = 0; r < N && prod != 0.0; ++r) {
                const int kprev = ks[(r + N - 1) % N];
                const int jr = is[(r + N - 1) % N];  // j = i on the trace
                prod *= R(jr * d + ks[r], kprev * d + is[r]);
            }
            total += prod;
        }
    }
    return total;
}

}  // namespace

TEST_CASE("tau(0) of a local family is exactly the identity") {
    const ChainSpec chain = trig_chain(3);
    const CMatrix t0 = transfer_matrix(chain, 0.0);
    CHECK(residual_norm(t0, CMatrix::identity(8)).max_abs < 1e-15);
    CHECK(condition_estimate(t0) == Catch::Approx(1.0));
}

TEST_CASE("identity family gives the shift at every u") {
    ChainSpec chain = trig_chain(3);
    chain.family = [](double) { return CMatrix::identity(4); };
    const CMatrix ta = transfer_matrix(chain, 0.7), tb = transfer_matrix(chain, 0.0);
    CHECK(residual_norm(ta, tb).max_abs == 0.0);
    // H = 0 for the constant family
    const HamiltonianExtract ex = hamiltonian_extract(chain);
    CHECK(ex.h.max_abs() < 1e-12);
}

TEST_CASE("transfer matrices commute for certified families") {
    Rng rng(91);
    for (const ChainSpec& chain : {trig_chain(2), trig_chain(3), r44_chain(3)}) {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
            worst = std::max(worst, commutator_norm(transfer_matrix(chain, u),
                                                    transfer_matrix(chain, v)));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("a perturbed family breaks commutativity") {
    ChainSpec chain = trig_chain(3);
    chain.family = [](double u) {
        CMatrix m = build_trig_block({0.3, 0.7, cplx(2.0), 1, -1, -1}, u);
        m(0, 1) += 0.1 * u;
        return m;
    };
    CHECK(commutator_norm(transfer_matrix(chain, 0.41), transfer_matrix(chain, -0.27)) > 1e-3);
}

TEST_CASE("extracted Hamiltonian commutes with the transfer family") {
    const HamiltonianExtract ex = hamiltonian_extract(trig_chain(3), 1e-5);
    CHECK(ex.tau0_condition < 10.0);
    CHECK(ex.commutator_with_tau < 1e-7);

    const HamiltonianExtract ex44 = hamiltonian_extract(r44_chain(3), 1e-5);
    CHECK(ex44.commutator_with_tau < 1e-7);
}

TEST_CASE("two-site density of the 16x16 family matches its local operator up to one constant") {
    const double h = 1e-6;
    const CMatrix d0 =
        (build_r44_eps(1, 1, 1, h) - build_r44_eps(1, 1, 1, -h)) * cplx(1.0 / (2 * h));
    const CMatrix density = h44_local_density();
    // least-squares fit of the single constant J
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < d0.rows(); ++i)
        for (std::size_t j = 0; j < d0.cols(); ++j) {
            num += std::conj(density(i, j)) * d0(i, j);
            den += std::norm(density(i, j));
        }
    const cplx J = num / den;
    CHECK(std::abs(J - cplx(0, 1)) < 1e-8);
    CHECK(residual_norm(d0, density * J).max_abs < 1e-8);
}

TEST_CASE("closed-form Hamiltonians") {
    // single-spin sets reduce to the plain two-site XYZ density
    HamiltonianSpec spec;
    spec.couplings = {0.7, -0.4, 1.1};
    spec.length = 2;
    spec.spin_set_sizes = {1, 1};
    const CMatrix h = closed_form_hamiltonian(spec, HamiltonianKind::XyzSets);
    CMatrix expect(4, 4);
    const char axes[3] = {'x', 'y', 'z'};
    for (int a = 0; a < 3; ++a)
        expect = expect + kron(pauli(axes[a]), pauli(axes[a])) * cplx(2.0 * spec.couplings[a]);
    // cyclic sum over two sites counts each bond twice
    CHECK(residual_norm(h, expect).max_abs < 1e-14);
    CHECK(residual_norm(h, h.dagger()).max_abs < 1e-14);  // real couplings, hermitian

    // composite spin sets stay hermitian
    HamiltonianSpec spec2;
    spec2.couplings = {0.3, 0.5, -0.2};
    spec2.length = 2;
    spec2.spin_set_sizes = {2, 1};
    const CMatrix h2 = closed_form_hamiltonian(spec2, HamiltonianKind::XyzSets);
    CHECK(residual_norm(h2, h2.dagger()).max_abs < 1e-13);

    // h44 commutes with the product conserved charge
    HamiltonianSpec spec44;
    spec44.length = 2;
    const CMatrix h44 = closed_form_hamiltonian(spec44, HamiltonianKind::H44);
    const CMatrix q = h44_conserved_charge(2);
    CHECK((h44 * q - q * h44).max_abs() < 1e-12);

    // h2222 equals the derivative of the fractional family
    const double fd = 1e-6;
    const CMatrix d0 = (build_r44_eps(1, cplx(0, 1), cplx(0, 1), fd) -
                        build_r44_eps(1, cplx(0, 1), cplx(0, 1), -fd)) *
                       cplx(1.0 / (2 * fd));
    const CMatrix h2222 = closed_form_hamiltonian(HamiltonianSpec{}, HamiltonianKind::H2222);
    CHECK(residual_norm(d0, h2222).max_abs < 1e-8);
}

TEST_CASE("partition function against both oracles") {
    const ChainSpec chain = trig_chain(3);

    // identity family: tau = I, so Z = site_dim^sites for any n_rows
    ChainSpec idc = chain;
    idc.family = [](double) { return CMatrix::identity(4); };
    CHECK(std::abs(partition_function(idc, 3, 0.0) - cplx(8.0)) < 1e-12);
    CHECK(std::abs(partition_function(idc, 1, 0.0) - cplx(8.0)) < 1e-12);
    CHECK(std::abs(partition_function(idc, 3, 0.0).real() -
                   eigen_power_sum(transfer_matrix(idc, 0.0), 3).real()) < 1e-9);

    // n_rows = 1 equals the independent trace contraction
    const double u = 0.4;
    CHECK(std::abs(partition_function(chain, 1, u) - trace_oracle(chain, u)) < 1e-10);

    // 3x3 lattice vs the eigenvalue-power sum
    const CMatrix tau = transfer_matrix(chain, u);
    CHECK(std::abs(partition_function(chain, 3, u) - eigen_power_sum(tau, 3)) < 1e-9);
}

TEST_CASE("partition function is invariant under cyclic relabeling") {
    const ChainSpec chain = trig_chain(3);
    const double u = 0.63;
    // translation operator T on three sites of dimension 2
    const int d = 2;
    const long D = 8;
    CMatrix t(D, D);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                t((b * d + c) * d + a, (a * d + b) * d + c) = 1.0;
    const CMatrix tau = transfer_matrix(chain, u);
    const CMatrix rotated = t * tau * t.dagger();
    CHECK(std::abs(matrix_power(rotated, 3).trace() - matrix_power(tau, 3).trace()) < 1e-10);
}

TEST_CASE("guards") {
    ChainSpec big;
    big.n_sites = 7;
    big.site_dim = 4;
    big.family = [](double) { return CMatrix::identity(16); };
    CHECK_THROWS_AS(transfer_matrix(big, 0.1), ConfigError);
    CHECK_THROWS_AS(partition_function(trig_chain(2), 0, 0.1), ConfigError);
}
