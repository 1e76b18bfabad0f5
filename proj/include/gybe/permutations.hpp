// Graded and colored permutation operators, their Yang-Baxterization, the
// 16x16 four-color families and the brute-force parity/phase searches.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gybe/matrix.hpp"
#include "gybe/rng.hpp"

namespace gybe {

// color map tau of the basis states; families in scope are involutions
struct PermSpec {
    int n = 2;
    std::vector<int> tau;  // bijection on 0..n-1

    static PermSpec trivial(int n) {
        PermSpec s;
        s.n = n;
        s.tau.resize(n);
        for (int i = 0; i < n; ++i) s.tau[i] = i;
        return s;
    }

    bool involution() const {
        for (int i = 0; i < n; ++i)
            if (tau[tau[i]] != i) return false;
        return true;
    }
    void validate() const {
        if (static_cast<int>(tau.size()) != n) throw ConfigError("PermSpec: tau size mismatch");
        std::vector<char> seen(n, 0);
        for (int v : tau) {
            if (v < 0 || v >= n || seen[v]) throw ConfigError("PermSpec: tau is not a bijection");
            seen[v] = 1;
        }
    }
};

// parity exponent p per (color e, i1, j1); phase = exp(i*pi*p), so p = 1/2
// gives i. Diagonal entries (i1 == j1) are zero. When n_colors == 1 the
// table is shared by every color. The second index pair is dropped by
// default; full (i1,i2,j1,j2) dependence is available for the unconstrained
// searches.
class ParityAssignment {
public:
    ParityAssignment() = default;
    ParityAssignment(int n, int n_colors, bool full_keying = false)
        : n_(n),
          n_colors_(n_colors),
          full_(full_keying),
          p_(static_cast<std::size_t>(n_colors) * n * n * (full_keying ? n * n : 1), 0.0) {}

    static ParityAssignment zero(int n) { return ParityAssignment(n, 1); }

    int n() const { return n_; }
    int colors() const { return n_colors_; }
    bool full_keying() const { return full_; }

    double& at(int e, int i1, int j1) {
        return p_[(static_cast<std::size_t>(e % n_colors_) * n_ + i1) * n_ + j1];
    }
    double at(int e, int i1, int j1) const {
        return p_[(static_cast<std::size_t>(e % n_colors_) * n_ + i1) * n_ + j1];
    }
    double& at_full(int e, int i1, int i2, int j1, int j2) {
        return p_[(((static_cast<std::size_t>(e % n_colors_) * n_ + i1) * n_ + i2) * n_ + j1) *
                      n_ +
                  j2];
    }
    double lookup(int e, int i1, int i2, int j1, int j2) const {
        if (!full_) return at(e, i1, j1);
        return p_[(((static_cast<std::size_t>(e % n_colors_) * n_ + i1) * n_ + i2) * n_ + j1) *
                      n_ +
                  j2];
    }
    cplx phase(int e, int i1, int j1, int i2 = 0, int j2 = 0) const {
        const double p = lookup(e, i1, i2, j1, j2);
        // exact values on the half-integer lattice, exp(i pi p) otherwise
        const double q = p - 2.0 * std::floor(p / 2.0);
        const long twice = std::lround(2.0 * q);
        if (std::abs(2.0 * q - twice) < 1e-12) {
            switch (twice % 4) {
                case 0: return cplx(1, 0);
                case 1: return cplx(0, 1);
                case 2: return cplx(-1, 0);
                case 3: return cplx(0, -1);
            }
        }
        return std::exp(cplx(0.0, M_PI * p));
    }

    bool diagonal_zero() const {
        for (int e = 0; e < n_colors_; ++e)
            for (int i1 = 0; i1 < n_; ++i1)
                for (int i2 = 0; i2 < n_; ++i2)
                    if (lookup(e, i1, i2, i1, i2) != 0.0) return false;
        return true;
    }

private:
    int n_ = 0, n_colors_ = 1;
    bool full_ = false;
    std::vector<double> p_;
};

// entry at (row (j1,j2), col (i1,i2)) = phase(i1,j1) [i1 = tau(j2)][i2 = tau(j1)]
inline CMatrix build_graded_perm(const PermSpec& spec, const ParityAssignment& parity, int e = 0) {
    spec.validate();
    const int n = spec.n;
    CMatrix P(n * n, n * n);
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2) {
            const int i1 = spec.tau[j2], i2 = spec.tau[j1];
            P(j1 * n + j2, i1 * n + i2) = parity.phase(e, i1, j1, i2, j2);
        }
    return P;
}

// 1/2 (e^{alpha u} P + e^{-alpha u} P†)
inline CMatrix yang_baxterize(const CMatrix& P, double alpha, double u) {
    if (!P.square()) throw DimensionError("yang_baxterize: square operator required");
    return P * (0.5 * std::exp(cplx(alpha * u))) + P.dagger() * (0.5 * std::exp(cplx(-alpha * u)));
}

// ---- the four-color N=4 set ----

inline std::vector<PermSpec> four_color_set() {
    std::vector<PermSpec> out(4);
    out[0] = PermSpec{4, {0, 1, 2, 3}};
    out[1] = PermSpec{4, {1, 0, 3, 2}};  // a
    out[2] = PermSpec{4, {2, 3, 0, 1}};  // b
    out[3] = PermSpec{4, {3, 2, 1, 0}};  // c
    return out;
}

// e-independent parity satisfying antisymmetry p(j,i) = p(i,j)+1 and the
// linking relations p(4,1) = p(3,2)+1, p(2,1) = p(4,3)+1, p(3,1) = p(4,2)
// (1-based pairs, first index = i1). Three free bits; (0,0,1) reproduces
// the explicit 16x16 entry table.
inline ParityAssignment symmetric_parity(int b21, int b31, int b41) {
    ParityAssignment p(4, 1);
    auto set_pair = [&](int a, int b, int val) {  // 1-based (i1,j1) = (a,b)
        p.at(0, a - 1, b - 1) = val % 2;
        p.at(0, b - 1, a - 1) = (val + 1) % 2;
    };
    set_pair(2, 1, b21);
    set_pair(3, 1, b31);
    set_pair(4, 1, b41);
    set_pair(4, 2, b31);            // p(3,1) = p(4,2)
    set_pair(3, 2, (b41 + 1) % 2);  // p(4,1) = p(3,2)+1
    set_pair(4, 3, (b21 + 1) % 2);  // p(2,1) = p(4,3)+1
    return p;
}

// sum of Yang-Baxterized colored graded permutations
inline CMatrix build_perm_superposition(const std::vector<std::pair<int, double>>& terms,
                                        const ParityAssignment& parity,
                                        const std::vector<PermSpec>& colors, double u) {
    if (terms.empty()) throw ConfigError("perm superposition: no terms");
    const int n = colors.at(terms.front().first).n;
    CMatrix out(n * n, n * n);
    for (const auto& [e, alpha] : terms) {
        const PermSpec& spec = colors.at(e);
        if (spec.n != n) throw DimensionError("perm superposition: mixed dimensions");
        out = out + yang_baxterize(build_graded_perm(spec, parity, e), alpha, u);
    }
    return out;
}

// ---- Pauli building blocks of the 16x16 family ----

inline CMatrix pauli(char a) {
    CMatrix m(2, 2);
    switch (a) {
        case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 'y': m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
        case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        case 'i': m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        default: throw ConfigError("pauli: unknown axis");
    }
    return m;
}

inline CMatrix m_bar(char a) {
    switch (a) {
        case 'x': return kron(pauli('i'), pauli('x'));
        case 'y': return kron(pauli('x'), pauli('i'));
        default:  return kron(pauli('x'), pauli('x'));
    }
}
inline CMatrix m_breve(char a) {
    switch (a) {
        case 'x': return kron(pauli('z'), pauli('y')) * cplx(0, 1);
        case 'y': return kron(pauli('y'), pauli('i')) * cplx(0, 1);
        default:  return kron(pauli('x'), pauli('y')) * cplx(0, -1);
    }
}

// cosh(u) I16 + sinh(u) (ex M̆x⊗M̄x + ey M̆y⊗M̄y + ez M̆z⊗M̄z); integer phases
// ex,ey,ez = ±1 reproduce the symmetric parity family, ±i realize the
// fractional parities
inline CMatrix build_r44_eps(cplx ex, cplx ey, cplx ez, double u) {
    CMatrix X = kron(m_breve('x'), m_bar('x')) * ex + kron(m_breve('y'), m_bar('y')) * ey +
                kron(m_breve('z'), m_bar('z')) * ez;
    return CMatrix::identity(16) * cplx(std::cosh(u)) + X * cplx(std::sinh(u));
}

// 16x16 from the four-color superposition with equal-keyed alpha pattern
inline CMatrix build_r44(const std::array<double, 4>& alphas, const ParityAssignment& parity,
                         double u) {
    static const std::vector<PermSpec> colors = four_color_set();
    std::vector<std::pair<int, double>> terms;
    for (int e = 0; e < 4; ++e) terms.emplace_back(e, alphas[e]);
    return build_perm_superposition(terms, parity, colors, u);
}

inline const std::array<std::array<double, 4>, 7>& r44_alpha_patterns(double a) {
    static std::array<std::array<double, 4>, 7> pats;
    pats = {{{a, a, a, a}, {a, 0, a, 0}, {0, a, 0, a}, {a, 0, 0, a},
             {0, a, a, 0}, {a, a, 0, 0}, {0, 0, a, a}}};
    return pats;
}

// normalization making the superposition unitary for real alphas
inline double r44_unitary_norm(const std::array<double, 4>& alphas, double u) {
    double s = 1.0;
    for (double a : alphas) s += std::pow(std::sinh(a * u), 2);
    return 1.0 / std::sqrt(s);
}

// ---- identity report for the Pauli decomposition ----

struct PauliIdentityReport {
    double mbar_identity = 0.0;      // M̄ vs Pauli tensor products
    double mbreve_identity = 0.0;    // M̆ vs Pauli tensor products
    double mbar_commutativity = 0.0; // [M̄a, M̄b]
    double mbreve_closure = 0.0;     // [M̆a, M̆b] + 2 M̆c cyclic
    double r44_derivative = 0.0;     // finite-difference dR44/du|0 vs sum of M̆⊗M̄
    double h44_density = 0.0;        // dR44/du|0 vs i * displayed Pauli bracket
    double h2222_density = 0.0;      // fractional-phase derivative vs its bracket
    double max() const {
        double m = mbar_identity;
        for (double v : {mbreve_identity, mbar_commutativity, mbreve_closure, r44_derivative,
                         h44_density, h2222_density})
            m = std::max(m, v);
        return m;
    }
};

// bracket of the 4-dim-site chain density: sz⊗sy⊗I⊗sx + sy⊗I⊗sx⊗I − sx⊗sy⊗sx⊗sx
inline CMatrix h44_local_density() {
    return kron(kron(pauli('z'), pauli('y')), kron(pauli('i'), pauli('x'))) +
           kron(kron(pauli('y'), pauli('i')), kron(pauli('x'), pauli('i'))) -
           kron(kron(pauli('x'), pauli('y')), kron(pauli('x'), pauli('x')));
}

// bracket of the fractional-phase family at phases (ex, ey, ez)
inline CMatrix h2222_local_density(cplx ex, cplx ey, cplx ez) {
    return kron(kron(pauli('z'), pauli('y')), kron(pauli('i'), pauli('x'))) * (ex * cplx(0, 1)) +
           kron(kron(pauli('y'), pauli('i')), kron(pauli('x'), pauli('i'))) * (ey * cplx(0, 1)) +
           kron(kron(pauli('x'), pauli('y')), kron(pauli('x'), pauli('x'))) * (ez * cplx(0, -1));
}

inline PauliIdentityReport pauli_identities_check() {
    PauliIdentityReport rep;
    auto rmax = [](const CMatrix& a, const CMatrix& b) { return residual_norm(a, b).max_abs; };

    rep.mbar_identity = std::max({rmax(m_bar('x'), kron(pauli('i'), pauli('x'))),
                                  rmax(m_bar('y'), kron(pauli('x'), pauli('i'))),
                                  rmax(m_bar('z'), kron(pauli('x'), pauli('x')))});
    rep.mbreve_identity =
        std::max({rmax(m_breve('x'), kron(pauli('z'), pauli('y')) * cplx(0, 1)),
                  rmax(m_breve('y'), kron(pauli('y'), pauli('i')) * cplx(0, 1)),
                  rmax(m_breve('z'), kron(pauli('x'), pauli('y')) * cplx(0, -1))});

    const char ax[3] = {'x', 'y', 'z'};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            rep.mbar_commutativity = std::max(
                rep.mbar_commutativity, rmax(m_bar(ax[i]) * m_bar(ax[j]), m_bar(ax[j]) * m_bar(ax[i])));

    // [M̆a, M̆b] = -2 M̆c cyclically; i M̆ closes as an sl2 triple
    for (int i = 0; i < 3; ++i) {
        const char a = ax[i], b = ax[(i + 1) % 3], c = ax[(i + 2) % 3];
        const CMatrix comm = m_breve(a) * m_breve(b) - m_breve(b) * m_breve(a);
        rep.mbreve_closure = std::max(rep.mbreve_closure, rmax(comm, m_breve(c) * cplx(-2.0)));
    }

    const CMatrix X = kron(m_breve('x'), m_bar('x')) + kron(m_breve('y'), m_bar('y')) +
                      kron(m_breve('z'), m_bar('z'));
    const double h = 1e-6;
    const CMatrix fd = (build_r44_eps(1, 1, 1, h) - build_r44_eps(1, 1, 1, -h)) * cplx(1.0 / (2 * h));
    rep.r44_derivative = rmax(fd, X);

    rep.h44_density = rmax(X, h44_local_density() * cplx(0, 1));   // global constant J = i

    const cplx iy(0, 1);
    const CMatrix d0 = kron(m_breve('x'), m_bar('x')) + kron(m_breve('y'), m_bar('y')) * iy +
                       kron(m_breve('z'), m_bar('z')) * iy;
    rep.h2222_density = rmax(d0, h2222_local_density(1.0, iy, iy));
    return rep;
}

// ---- parity / phase searches ----

enum class SearchMode { SymmetricConstrained, RandomUnconstrained, FractionalPhases };

struct CatalogEntry {
    std::string assignment;   // lexicographic key
    std::string target;
    double max_residual = 0.0;
    int samples = 0;
};

struct ParityCatalog {
    std::vector<CatalogEntry> passing;
    int tested = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
};

// residual of the spectral difference-form equation for a 16x16 family over
// one (u,v); shape encoded by dims and the two span starts
inline double r44_equation_residual(const std::function<CMatrix(double)>& fam,
                                    const SiteDims& dims, int start_a, int start_b, double u,
                                    double v) {
    const CMatrix A1 = embed_operator(fam(u - v), dims, start_a);
    const CMatrix B1 = embed_operator(fam(u), dims, start_b);
    const CMatrix A2 = embed_operator(fam(v), dims, start_a);
    const CMatrix B2 = embed_operator(fam(v), dims, start_b);
    const CMatrix A3 = embed_operator(fam(u), dims, start_a);
    const CMatrix B3 = embed_operator(fam(u - v), dims, start_b);
    return residual_norm(A1 * B1 * A2, B2 * A3 * B3).max_abs;
}

inline std::pair<SiteDims, std::pair<int, int>> parity_target_shape(const std::string& target) {
    if (target == "ybe-2-4-2") return {SiteDims{4, 4, 4}, {0, 1}};
    if (target == "gybe-2-4-1") return {SiteDims{2, 2, 2, 2, 2}, {0, 1}};
    if (target == "gybe-2-4-3") return {SiteDims{2, 2, 2, 2, 2, 2, 2}, {0, 3}};
    throw ConfigError("parity search: unknown target '" + target + "'");
}

inline ParityCatalog parity_search(SearchMode mode, const std::string& target, int budget,
                                   std::uint64_t seed, double tol = 1e-10) {
    const auto [dims, spans] = parity_target_shape(target);
    ParityCatalog cat;
    cat.seed = seed;
    cat.tol = tol;
    Rng rng(seed);
    const int n_samples = 10;
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n_samples; ++i) {
        const double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
        pts.emplace_back(u, v);
    }
    auto test = [&](const std::function<CMatrix(double)>& fam) {
        double worst = 0.0;
        for (const auto& [u, v] : pts)
            worst = std::max(worst,
                             r44_equation_residual(fam, dims, spans.first, spans.second, u, v));
        return worst;
    };

    if (mode == SearchMode::SymmetricConstrained) {
        for (int b21 = 0; b21 < 2; ++b21)
            for (int b31 = 0; b31 < 2; ++b31)
                for (int b41 = 0; b41 < 2; ++b41) {
                    const ParityAssignment p = symmetric_parity(b21, b31, b41);
                    auto fam = [&p](double x) { return build_r44({1, 1, 1, 1}, p, x); };
                    const double worst = test(fam);
                    ++cat.tested;
                    if (worst < tol)
                        cat.passing.push_back({"bits:" + std::to_string(b21) +
                                                   std::to_string(b31) + std::to_string(b41),
                                               target, worst, n_samples});
                }
    } else if (mode == SearchMode::FractionalPhases) {
        const std::array<cplx, 4> vals{cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
        const char* names[4] = {"+1", "-1", "+i", "-i"};
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                for (int z = 0; z < 4; ++z) {
                    auto fam = [&](double t) { return build_r44_eps(vals[x], vals[y], vals[z], t); };
                    const double worst = test(fam);
                    ++cat.tested;
                    if (worst < tol)
                        cat.passing.push_back({std::string("eps:") + names[x] + "," + names[y] +
                                                   "," + names[z],
                                               target, worst, n_samples});
                }
    } else {
        // random e-dependent sign assignments with the full second index
        // pair kept and a zero diagonal
        for (int trial = 0; trial < budget; ++trial) {
            ParityAssignment p(4, 4, true);
            std::string key = "rand:";
            for (int e = 0; e < 4; ++e)
                for (int i1 = 0; i1 < 4; ++i1)
                    for (int i2 = 0; i2 < 4; ++i2)
                        for (int j1 = 0; j1 < 4; ++j1)
                            for (int j2 = 0; j2 < 4; ++j2) {
                                const bool diag = i1 == j1 && i2 == j2;
                                const int bit = diag ? 0 : (rng.unit() < 0.5 ? 0 : 1);
                                p.at_full(e, i1, i2, j1, j2) = bit;
                                key += char('0' + bit);
                            }
            auto fam = [&p](double x) { return build_r44({1, 1, 1, 1}, p, x); };
            const double worst = test(fam);
            ++cat.tested;
            if (worst < tol) cat.passing.push_back({key, target, worst, n_samples});
        }
    }
    std::sort(cat.passing.begin(), cat.passing.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.assignment < b.assignment; });
    return cat;
}

}  // namespace gybe
