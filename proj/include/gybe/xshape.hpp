// Assembly of arbitrary-dimension X-shaped matrices from small cells:
// the signed-label bookkeeping, the cell placement, the M-matrix family,
// induced matrices, the 8x8 two-parametric and XXZ-type pairs, and the
// p-block generalization.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gybe/blocks.hpp"
#include "gybe/matrix.hpp"

namespace gybe {

struct BlockMapError : ConfigError {
    explicit BlockMapError(const std::string& what) : ConfigError(what) {}
};
struct PatternError : ConfigError {
    explicit PatternError(const std::string& what) : ConfigError(what) {}
};

// index(l) + index(-l) = dim-1 by construction
inline int label_index(int dim, int label) {
    const int half = dim / 2;
    const bool odd = dim % 2 != 0;
    if (label > half || label < -half || (!odd && label == 0))
        throw DimensionError("label out of range for dimension " + std::to_string(dim));
    if (label >= (odd ? 0 : 1)) return half - label;
    return dim - 1 - (half - (-label));  // mirror of index(-label)
}

// Flat index <-> signed label map of one site. Labels run N..1,-1..-N for
// even dimension and N..0..-N for odd, index 0 carrying the highest label.
struct LabelMap {
    int dim = 0;

    explicit LabelMap(int n) : dim(n) {
        if (n < 1) throw DimensionError("LabelMap: dimension must be >= 1");
    }
    int half() const { return dim / 2; }
    bool odd() const { return dim % 2 != 0; }

    std::vector<int> labels() const {
        std::vector<int> out(dim);
        for (int l = half(); l >= -half(); --l) {
            if (l == 0 && !odd()) continue;
            out[label_index(dim, l)] = l;
        }
        return out;
    }
    int index(int label) const { return label_index(dim, label); }
};

inline int vertex_count(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw DimensionError("vertex_count: dims must be >= 1");
    if (n1 % 2 == 0 || n2 % 2 == 0) return 2 * n1 * n2;
    return 2 * n1 * n2 - 1;
}

using BlockFn = std::function<CMatrix(double)>;

// Cells keyed by nonnegative label pairs; the assembler derives all signed
// placements. gamma: exponential prefactor rates, alpha: argument rates
// (defaults 0 and 1).
struct BlockMap {
    int n1 = 0, n2 = 0;
    std::map<std::pair<int, int>, BlockFn> cells;
    std::map<std::pair<int, int>, double> gamma;
    std::map<std::pair<int, int>, double> alpha;

    std::vector<std::pair<int, int>> required_pairs() const {
        std::vector<std::pair<int, int>> out;
        const int h1 = n1 / 2, h2 = n2 / 2;
        const int lo1 = (n1 % 2 != 0) ? 0 : 1, lo2 = (n2 % 2 != 0) ? 0 : 1;
        for (int i = lo1; i <= h1; ++i)
            for (int j = lo2; j <= h2; ++j) out.emplace_back(i, j);
        return out;
    }
};

inline CMatrix assemble_x_shaped(const BlockMap& bm, double u) {
    const int n1 = bm.n1, n2 = bm.n2;
    const int dim = n1 * n2;
    CMatrix out(dim, dim);
    auto idx = [&](int l1, int l2) { return label_index(n1, l1) * n2 + label_index(n2, l2); };

    for (const auto& pr : bm.required_pairs()) {
        auto it = bm.cells.find(pr);
        if (it == bm.cells.end())
            throw BlockMapError("missing cell (" + std::to_string(pr.first) + "," +
                                std::to_string(pr.second) + ")");
        const double g = bm.gamma.count(pr) ? bm.gamma.at(pr) : 0.0;
        const double a = bm.alpha.count(pr) ? bm.alpha.at(pr) : 1.0;
        const cplx pref = std::exp(cplx(g * u));
        const CMatrix blk = it->second(a * u) * pref;
        const auto [ni, nj] = pr;

        if (ni > 0 && nj > 0) {
            if (blk.rows() != 4 || blk.cols() != 4)
                throw BlockMapError("cell (+,+) must be 4x4");
            // cell rows/cols ordered (++, +-, -+, --) in the signed labels
            const int pos[4] = {idx(ni, nj), idx(ni, -nj), idx(-ni, nj), idx(-ni, -nj)};
            for (int k = 0; k < 4; ++k) out(pos[k], pos[k]) += blk(k, k);
            constexpr int anti[4][2] = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
            for (const auto& rc : anti) out(pos[rc[0]], pos[rc[1]]) += blk(rc[0], rc[1]);
        } else if (ni == 0 && nj > 0) {
            if (blk.rows() != 2 || blk.cols() != 2)
                throw BlockMapError("cell (0,n) must be 2x2");
            const int pos[2] = {idx(0, nj), idx(0, -nj)};
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) out(pos[r], pos[c]) += blk(r, c);
        } else if (ni > 0 && nj == 0) {
            if (blk.rows() != 2 || blk.cols() != 2)
                throw BlockMapError("cell (n,0) must be 2x2");
            const int pos[2] = {idx(ni, 0), idx(-ni, 0)};
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) out(pos[r], pos[c]) += blk(r, c);
        } else {
            if (blk.rows() != 1 || blk.cols() != 1)
                throw BlockMapError("cell (0,0) must be 1x1");
            out(idx(0, 0), idx(0, 0)) += blk(0, 0);
        }
    }
    return out;
}

// Inverse of the assembly placement for one cell (rates are not divided out).
inline CMatrix extract_block(const CMatrix& m, int n1, int n2, std::pair<int, int> pair) {
    if (m.rows() != static_cast<std::size_t>(n1 * n2) || !m.square())
        throw DimensionError("extract_block: matrix does not match site dims");
    auto idx = [&](int l1, int l2) { return label_index(n1, l1) * n2 + label_index(n2, l2); };
    const auto [ni, nj] = pair;
    if (ni > 0 && nj > 0) {
        const int pos[4] = {idx(ni, nj), idx(ni, -nj), idx(-ni, nj), idx(-ni, -nj)};
        CMatrix blk(4, 4);
        for (int k = 0; k < 4; ++k) blk(k, k) = m(pos[k], pos[k]);
        constexpr int anti[4][2] = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
        for (const auto& rc : anti) blk(rc[0], rc[1]) = m(pos[rc[0]], pos[rc[1]]);
        return blk;
    }
    if (ni == 0 && nj > 0) {
        const int pos[2] = {idx(0, nj), idx(0, -nj)};
        CMatrix blk(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) blk(r, c) = m(pos[r], pos[c]);
        return blk;
    }
    if (ni > 0 && nj == 0) {
        const int pos[2] = {idx(ni, 0), idx(-ni, 0)};
        CMatrix blk(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) blk(r, c) = m(pos[r], pos[c]);
        return blk;
    }
    CMatrix blk(1, 1);
    blk(0, 0) = m(idx(0, 0), idx(0, 0));
    return blk;
}

inline bool is_x_shaped(const CMatrix& m, double tol = 0.0) {
    if (!m.square()) return false;
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c && r + c != n - 1 && std::abs(m(r, c)) > tol) return false;
    return true;
}

// ---- M-matrix family ----

// anti-diagonal, +1 in the upper half rows and -1 in the lower; M^2 = -I
inline CMatrix m_matrix(int dim) {
    if (dim < 2 || dim % 2 != 0) throw DimensionError("m_matrix: even dimension >= 2 required");
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m(i, dim - 1 - i) = (i < dim / 2) ? 1.0 : -1.0;
    return m;
}

inline CMatrix build_m_family(int dim, double u) {
    return CMatrix::identity(dim) * cplx(std::cosh(u)) + m_matrix(dim) * cplx(std::sinh(u));
}

// braid limits M± = I ± M
inline CMatrix m_plus(int dim) { return CMatrix::identity(dim) + m_matrix(dim); }
inline CMatrix m_minus(int dim) { return CMatrix::identity(dim) - m_matrix(dim); }

// ---- induced matrices ----

// r22 ⊗ I_{n1} ⊗ I_{n2}; optional diagonal-exponential factors replace the
// unit operators
inline CMatrix build_induced(const CMatrix& r22, int n1, int n2) {
    if (r22.rows() != 4 || r22.cols() != 4) throw DimensionError("build_induced: 4x4 input required");
    return kron(r22, CMatrix::identity(n1), CMatrix::identity(n2));
}

inline CMatrix build_induced_diag(const CMatrix& r22, const std::vector<double>& g1,
                                  const std::vector<double>& g2, double u) {
    if (r22.rows() != 4 || r22.cols() != 4) throw DimensionError("build_induced: 4x4 input required");
    CMatrix d1(g1.size(), g1.size()), d2(g2.size(), g2.size());
    for (std::size_t i = 0; i < g1.size(); ++i) d1(i, i) = std::exp(cplx(0.0, g1[i] * u));
    for (std::size_t i = 0; i < g2.size(); ++i) d2(i, i) = std::exp(cplx(0.0, g2[i] * u));
    return kron(r22, d1, d2);
}

// chain layout of the inherited GYBE: the 4x4 acts on sites (0,1), the
// induced operator on sites (1..4) of [2,2,2,n1,n2]
inline SiteDims induced_chain_dims(int n1, int n2) { return SiteDims{2, 2, 2, n1, n2}; }

// ---- appendix 8x8 families ----

enum class Appendix8x8Kind { Trig42, Trig24, Xxz42, Xxz24 };

struct AppendixTrigParams {
    double alpha0 = 0.4, alphax = 0.9;  // the two admissible rate values
    std::array<double, 4> rates{0.4, 0.9, 0.4, 0.9};  // (alpha1..alpha4)
    double alpha_pref = 0.0;  // e^{alpha u} on the inner cell

    // the permissible patterns: (a3,a4) is (a1,a2) or (a2,a1), with
    // {a1,a2} = {alpha0, alphax}
    bool pattern_valid() const {
        const bool outer_ok = (rates[0] == alpha0 && rates[1] == alphax) ||
                              (rates[0] == alphax && rates[1] == alpha0);
        const bool inner_ok = (rates[2] == rates[0] && rates[3] == rates[1]) ||
                              (rates[2] == rates[1] && rates[3] == rates[0]);
        return outer_ok && inner_ok;
    }
};

inline CMatrix build_appendix_trig(Appendix8x8Kind kind, const AppendixTrigParams& p, double u,
                                   bool allow_any_pattern = false) {
    if (!allow_any_pattern && !p.pattern_valid())
        throw PatternError("appendix trig: rate pattern outside the permissible list");
    TrigBlockParams outer{p.rates[0], p.rates[1], 1.0, 1, -1, -1};
    TrigBlockParams inner{p.rates[2], p.rates[3], 1.0, 1, -1, -1};
    BlockMap bm;
    if (kind == Appendix8x8Kind::Trig42) {
        bm.n1 = 4; bm.n2 = 2;
        bm.cells[{2, 1}] = [outer](double x) { return build_trig_block(outer, x); };
        bm.cells[{1, 1}] = [inner](double x) { return build_trig_block(inner, x); };
        bm.gamma[{1, 1}] = p.alpha_pref;
    } else if (kind == Appendix8x8Kind::Trig24) {
        bm.n1 = 2; bm.n2 = 4;
        bm.cells[{1, 2}] = [outer](double x) { return build_trig_block(outer, x); };
        bm.cells[{1, 1}] = [inner](double x) { return build_trig_block(inner, x); };
        bm.gamma[{1, 1}] = p.alpha_pref;
    } else {
        throw ConfigError("build_appendix_trig: trig kind required");
    }
    return assemble_x_shaped(bm, u);
}

struct AppendixXxzParams {
    int variant = +1;        // shared by all cells
    double u0 = 1.1;         // crossing parameter of the inner (1,1) cell
    double ux = 1.1;         // crossing parameter of the outer cell
    double gamma = 0.0;      // asymmetry of the inner cell
    double beta = 0.0;       // asymmetry of the outer cell
    double a0 = 1.0, ax = 1.0;  // argument rates
    double alpha_pref = 0.0;    // e^{alpha u} on the outer cell
};

inline CMatrix build_appendix_xxz(Appendix8x8Kind kind, const AppendixXxzParams& p, double u) {
    XxzBlockParams inner{p.u0, p.gamma, p.variant, p.a0, 0.0};
    XxzBlockParams outer{p.ux, p.beta, p.variant, p.ax, 0.0};
    BlockMap bm;
    if (kind == Appendix8x8Kind::Xxz42) {
        bm.n1 = 4; bm.n2 = 2;
        bm.cells[{2, 1}] = [outer](double x) { return build_xxz_block(outer, x); };
        bm.cells[{1, 1}] = [inner](double x) { return build_xxz_block(inner, x); };
        bm.gamma[{2, 1}] = p.alpha_pref;
    } else if (kind == Appendix8x8Kind::Xxz24) {
        bm.n1 = 2; bm.n2 = 4;
        bm.cells[{1, 2}] = [outer](double x) { return build_xxz_block(outer, x); };
        bm.cells[{1, 1}] = [inner](double x) { return build_xxz_block(inner, x); };
        bm.gamma[{1, 2}] = p.alpha_pref;
    } else {
        throw ConfigError("build_appendix_xxz: xxz kind required");
    }
    return assemble_x_shaped(bm, u);
}

// ---- p-block generalization ----

// (pN·pK)-dimensional matrix from p^2 x p^2 cells, one per (n,k) pair.
// Index disposition follows the proposition: site-1 flat order
// (1,N)..(1,1),(2,N)..(2,1),...,(p,N)..(p,1) and likewise for site 2.
// For p=2 this is the X-shaped assembly up to the per-site relabeling
// that maps (2,n) -> -n in descending order.
inline CMatrix build_p_block_general(int p, int n, int k,
                                     const std::map<std::pair<int, int>, BlockFn>& cells,
                                     double u) {
    if (p < 1 || n < 1 || k < 1) throw DimensionError("p-block: positive p, N, K required");
    const int dim = p * n * p * k;
    CMatrix out(dim, dim);
    for (int nn = 1; nn <= n; ++nn)
        for (int kk = 1; kk <= k; ++kk) {
            auto it = cells.find({nn, kk});
            if (it == cells.end())
                throw BlockMapError("p-block: missing cell (" + std::to_string(nn) + "," +
                                    std::to_string(kk) + ")");
            const CMatrix blk = it->second(u);
            if (blk.rows() != static_cast<std::size_t>(p * p) || !blk.square())
                throw BlockMapError("p-block: cell must be p^2 x p^2");
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b)
                    for (int ap = 0; ap < p; ++ap)
                        for (int bp = 0; bp < p; ++bp) {
                            const cplx v = blk(a * p + b, ap * p + bp);
                            if (v == 0.0) continue;
                            const int row = (a * n + (n - nn)) * (p * k) + (b * k + (k - kk));
                            const int col = (ap * n + (n - nn)) * (p * k) + (bp * k + (k - kk));
                            out(row, col) += v;
                        }
        }
    return out;
}

// permutation relating the proposition ordering to the X-shaped labels, p=2
inline CMatrix p_block_relabel(int n) {
    CMatrix perm(2 * n, 2 * n);
    for (int a = 0; a < 2; ++a)
        for (int nn = 1; nn <= n; ++nn) {
            const int prop = a * n + (n - nn);
            const int xidx = (a == 0) ? label_index(2 * n, nn) : label_index(2 * n, -nn);
            perm(xidx, prop) = 1.0;
        }
    return perm;
}

}  // namespace gybe
