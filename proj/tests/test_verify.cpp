#include <catch2/catch_amalgamated.hpp>

#include "gybe/blocks.hpp"
#include "gybe/families.hpp"
#include "gybe/rng.hpp"
#include "gybe/verify.hpp"
#include "gybe/xshape.hpp"

using namespace gybe;

namespace {

CMatrix trig(double u, double g = 0.3, double b = 0.7, cplx q = cplx(2.0)) {
    return build_trig_block({g, b, q, 1, -1, -1}, u);
}

// hand-rolled 8x8 triple product over explicit indices, independent of
// embed_operator and the matrix product
CMatrix loop_oracle_triple(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
    // (a ⊗ I)(I ⊗ b)(c ⊗ I) on three qubits, element by element
    auto A = [&](int r, int s) { return a(r, s); };
    CMatrix out(8, 8);
    for (int r1 = 0; r1 < 2; ++r1)
        for (int r2 = 0; r2 < 2; ++r2)
            for (int r3 = 0; r3 < 2; ++r3)
                for (int c1 = 0; c1 < 2; ++c1)
                    for (int c2 = 0; c2 < 2; ++c2)
                        for (int c3 = 0; c3 < 2; ++c3) {
                            cplx sum = 0.0;
                            for (int k1 = 0; k1 < 2; ++k1)
                                for (int k2 = 0; k2 < 2; ++k2)
                                    for (int m2 = 0; m2 < 2; ++m2)
                                        for (int m3 = 0; m3 < 2; ++m3)
                                            sum += A(r1 * 2 + r2, k1 * 2 + k2) *
                                                   b(k2 * 2 + r3, m2 * 2 + m3) *
                                                   c(k1 * 2 + m2, c1 * 2 + c2) *
                                                   (m3 == c3 ? 1.0 : 0.0);
                            out(r1 * 4 + r2 * 2 + r3, c1 * 4 + c2 * 2 + c3) = sum;
                        }
    return out;
}

}  // namespace

TEST_CASE("embedding correctness against the loop oracle") {
    Rng rng(81);
    const double u = 0.41, v = -0.27;
    const CMatrix a = trig(u - v), b = trig(u), c = trig(v);
    const SiteDims dims{2, 2, 2};
    const CMatrix lhs = embed_operator(a, dims, 0) * embed_operator(b, dims, 1) *
                        embed_operator(c, dims, 0);
    CHECK(residual_norm(lhs, loop_oracle_triple(a, b, c)).max_abs < 1e-13);
}

TEST_CASE("verify_constant accepts the braid limits and rejects perturbations") {
    const GybeShape shape = GybeShape::gybe(2, 2, 1, EqForm::ConstantBraid);
    const CMatrix mp = m_plus(4);
    CHECK(verify_constant(mp, shape, 1e-14).pass);
    CHECK(verify_constant(CMatrix::identity(4), shape, 1e-15).max_abs_residual == 0.0);

    CMatrix bad = mp;
    bad(0, 1) += 0.1;
    const VerificationReport rep = verify_constant(bad, shape, 1e-10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_abs_residual > 1e-3);

    // the bare anti-diagonal involution fails the plain braid but obeys
    // A B A - B A B = B - A, so its residual equals ||B - A||_max
    const VerificationReport raw = verify_constant(m_matrix(4), shape, 1e-10);
    CHECK_FALSE(raw.pass);
    const SiteDims dims{2, 2, 2};
    const CMatrix defect = embed_operator(m_matrix(4), dims, 1) -
                           embed_operator(m_matrix(4), dims, 0);
    CHECK(raw.max_abs_residual == Catch::Approx(defect.max_abs()));

    CHECK_THROWS_AS(verify_constant(CMatrix::identity(8), shape), DimensionError);
}

TEST_CASE("verify_spectral basics") {
    const GybeShape shape = GybeShape::gybe(2, 2, 1);
    const SpanFamily fam = homogeneous_family([](double x) { return trig(x); });
    CHECK(verify_spectral(fam, shape, 0.3, 0.7).max_abs_residual < 1e-12);
    // u = v collapses the difference argument to the identity
    CHECK(verify_spectral(fam, shape, 0.42, 0.42).max_abs_residual < 1e-13);
}

TEST_CASE("verifier symmetry under transposed sides") {
    // transposing both sides of the difference-form equation reverses the
    // products, which is the same equation for the transposed family at
    // (u, u-v): ||E_F(u,v)|| = ||E_{F^T}(u, u-v)||
    Rng rng(82);
    const GybeShape shape = GybeShape::gybe(2, 2, 1);
    const SpanFamily fam = homogeneous_family([](double x) { return trig(x); });
    const SpanFamily bent = [&](const std::vector<int>& d, double x) {
        CMatrix m = fam(d, x);
        m(0, 1) += 0.05 * x;  // keep the residual away from zero
        return m;
    };
    const SpanFamily bentT = [&](const std::vector<int>& d, double x) {
        return bent(d, x).transpose();
    };
    for (int i = 0; i < 10; ++i) {
        const double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
        const double r1 = verify_spectral(bent, shape, u, v, 1.0).max_abs_residual;
        const double r2 = verify_spectral(bentT, shape, u, u - v, 1.0).max_abs_residual;
        CHECK(std::abs(r1 - r2) < 1e-13);
    }
}

TEST_CASE("second-kind composition") {
    const cplx q = std::exp(cplx(0.0, 0.3));
    auto bell = [q](double w) {
        CMatrix k(4, 4);
        k(0, 3) = q; k(1, 2) = 1.0; k(2, 1) = -1.0; k(3, 0) = -1.0 / q;
        return CMatrix::identity(4) + k * cplx(w);
    };
    CHECK(verify_second_kind(bell, 0.2, 0.5).max_abs_residual < 1e-11);
    CHECK(verify_second_kind(bell, 0.37, 0.37).max_abs_residual < 1e-13);
    CHECK_THROWS_AS(verify_second_kind(bell, 2.0, 0.5), SingularError);
}

TEST_CASE("factorized relation") {
    const std::array<double, 4> th{0.25, -0.4, 0.8, 0.15};
    auto diag = [&](double u) { return build_diag_block(th, u); };
    auto one = [](double) { return cplx(1.0); };
    CHECK(verify_factorized(diag, one, 0.7, -0.4).max_abs_residual < 1e-13);

    const double rate = 0.35;
    auto fb = [rate](double u) { return std::exp(cplx(0.0, rate * u)); };
    auto fam = [&](double u) {
        return build_circular_block(0.6, 1.1, cplx(1.7), cplx(0.8), u) * fb(u);
    };
    CHECK(verify_factorized(fam, fb, 0.9, 0.2).max_abs_residual < 1e-12);
    // v = 0 reduces to R(u) multiplied by Fbar(0) = 1
    CHECK(verify_factorized(fam, fb, 0.9, 0.0).max_abs_residual < 1e-13);
    auto zero = [](double) { return cplx(0.0); };
    CHECK_THROWS_AS(verify_factorized(fam, zero, 0.9, 0.2), SingularError);
}

TEST_CASE("unitarity defects") {
    CHECK(verify_unitary(CMatrix::identity(4)).max_abs_residual == 0.0);
    const CMatrix r = trig(1.0, 0.6, 1.1, std::exp(cplx(0.0, 0.45)));
    const VerificationReport raw = verify_unitary(r);
    CHECK(raw.max_abs_residual > 0.1);  // unnormalized block is far from unitary
    const double n = std::sqrt(2.0 / (std::cosh(2 * 0.6) + std::cosh(2 * 1.1)));
    CHECK(verify_unitary(r, n).max_abs_residual < 1e-12);
    CHECK_THROWS_AS(verify_unitary(r, 0.0), SingularError);
}

TEST_CASE("sweep determinism and n_samples = 1 equivalence") {
    SweepSpec spec;
    spec.family = homogeneous_family([](double x) { return trig(x); });
    spec.shape = GybeShape::gybe(2, 2, 1);
    spec.n_samples = 100;
    spec.seed = 7;
    spec.tol = 1e-10;
    const VerificationReport a = sweep(spec);
    const VerificationReport b = sweep(spec);
    CHECK(a.pass);
    CHECK(a.max_abs_residual == b.max_abs_residual);
    CHECK(a.frobenius_residual == b.frobenius_residual);

    spec.n_samples = 1;
    const VerificationReport one = sweep(spec);
    Rng rng(7);
    const double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
    const VerificationReport direct = verify_spectral(spec.family, spec.shape, u, v, spec.tol);
    CHECK(one.max_abs_residual == direct.max_abs_residual);
}

TEST_CASE("every registered family passes each of its certified shapes") {
    for (const FamilyEntry& fam : family_registry()) {
        REQUIRE_FALSE(fam.checks.empty());
        const FamilyHandle h = fam.make(fam.defaults);
        for (const CertifiedCheck& chk : fam.checks) {
            SweepSpec spec;
            spec.family = h.span;
            spec.shape = chk.shape;
            spec.n_samples = 25;
            spec.seed = 11;
            spec.tol = chk.tol;
            spec.scalar_family = h.scalar;
            spec.fbar = h.fbar;
            const VerificationReport rep = sweep(spec);
            INFO(fam.id << " @ " << chk.shape.id() << " -> " << rep.max_abs_residual);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("report invariant: pass iff residual within tolerance") {
    VerificationReport rep;
    rep.max_abs_residual = 5e-11;
    rep.finish(1e-10);
    CHECK(rep.pass);
    rep.max_abs_residual = 2e-10;
    rep.finish(1e-10);
    CHECK_FALSE(rep.pass);
}
