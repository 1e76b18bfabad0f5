// Dense complex matrices, tensor products and operator embedding.
// Everything in the library is built on top of this file; matrices are
// small (<= 128x128 in practice) so storage is a flat row-major vector
// and products are naive triple loops.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gybe {

using cplx = std::complex<double>;

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};
struct SingularError : std::runtime_error {
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMatrix operator+(const CMatrix& o) const {
        require_same_shape(o, "operator+");
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    CMatrix operator-(const CMatrix& o) const {
        require_same_shape(o, "operator-");
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    CMatrix operator*(const CMatrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionError("matrix product: " + shape_str() + " * " + o.shape_str());
        CMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx aik = a_[i * cols_ + k];
                if (aik == 0.0) continue;
                const cplx* brow = &o.a_[k * o.cols_];
                cplx* rrow = &r.a_[i * o.cols_];
                for (std::size_t j = 0; j < o.cols_; ++j) rrow[j] += aik * brow[j];
            }
        }
        return r;
    }
    CMatrix operator*(cplx s) const {
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }
    friend CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

    CMatrix transpose() const {
        CMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    CMatrix conj() const {
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
        return r;
    }
    CMatrix dagger() const { return transpose().conj(); }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : a_) m = std::max(m, std::abs(v));
        return m;
    }
    double frobenius() const {
        double s = 0.0;
        for (const cplx& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }
    // max column sum of |entries|
    double norm_one() const {
        double m = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }

    bool is_finite() const {
        for (const cplx& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    bool same_shape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void require_same_shape(const CMatrix& o, const char* op) const {
        if (!same_shape(o))
            throw DimensionError(std::string(op) + ": " + shape_str() + " vs " + o.shape_str());
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

// Site dimensions of a chain segment.
struct SiteDims {
    std::vector<int> dims;

    SiteDims() = default;
    SiteDims(std::initializer_list<int> d) : dims(d) { validate(); }
    explicit SiteDims(std::vector<int> d) : dims(std::move(d)) { validate(); }

    long total() const {
        long t = 1;
        for (int d : dims) t *= d;
        return t;
    }
    std::size_t size() const { return dims.size(); }
    int operator[](std::size_t i) const { return dims[i]; }

    void validate() const {
        for (int d : dims)
            if (d < 1) throw DimensionError("site dimensions must be >= 1");
    }
};

// Tensor product, leftmost factor most significant: flat row = i1*b.rows + i2.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const cplx av = a(i1, j1);
            if (av == 0.0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = av * b(i2, j2);
        }
    return r;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
    return kron(kron(a, b), c);
}

// I_(d1..d_{start-1}) ⊗ op ⊗ I_(...): op must cover a contiguous run of dims
// starting at `start`.
inline CMatrix embed_operator(const CMatrix& op, const SiteDims& dims, std::size_t start) {
    if (!op.square()) throw DimensionError("embed_operator: operator must be square");
    if (start >= dims.size()) throw DimensionError("embed_operator: start out of range");
    long span_dim = 1;
    std::size_t span = 0;
    while (span_dim < static_cast<long>(op.rows())) {
        if (start + span >= dims.size())
            throw DimensionError("embed_operator: operator does not fit the chain");
        span_dim *= dims[start + span];
        ++span;
    }
    if (span_dim != static_cast<long>(op.rows()))
        throw DimensionError("embed_operator: operator dimension does not factor over dims at start " +
                             std::to_string(start));
    long left = 1, right = 1;
    for (std::size_t i = 0; i < start; ++i) left *= dims[i];
    for (std::size_t i = start + span; i < dims.size(); ++i) right *= dims[i];

    const std::size_t m = op.rows();
    CMatrix r(left * m * right, left * m * right);
    for (long l = 0; l < left; ++l)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const cplx v = op(a, b);
                if (v == 0.0) continue;
                for (long q = 0; q < right; ++q) {
                    const std::size_t row = (l * m + a) * right + q;
                    const std::size_t col = (l * m + b) * right + q;
                    r(row, col) = v;
                }
            }
    return r;
}

// The residual pair used by every verifier.
struct Residual {
    double max_abs = 0.0;
    double frobenius = 0.0;
};

inline Residual residual_norm(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b))
        throw DimensionError("residual_norm: " + a.shape_str() + " vs " + b.shape_str());
    Residual r;
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double d = std::abs(a(i, j) - b(i, j));
            r.max_abs = std::max(r.max_abs, d);
            s += d * d;
        }
    r.frobenius = std::sqrt(s);
    return r;
}

// Gaussian elimination with partial pivoting; solves A X = B.
inline CMatrix solve(CMatrix a, CMatrix b) {
    if (!a.square() || a.rows() != b.rows())
        throw DimensionError("solve: incompatible shapes");
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best < 1e-300) throw SingularError("solve: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
        }
        const cplx d = a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) / d;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
        }
    }
    CMatrix x(n, b.cols());
    for (std::size_t jr = n; jr-- > 0;) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s = b(jr, j);
            for (std::size_t k = jr + 1; k < n; ++k) s -= a(jr, k) * x(k, j);
            x(jr, j) = s / a(jr, jr);
        }
    }
    return x;
}

inline CMatrix inverse(const CMatrix& a) { return solve(a, CMatrix::identity(a.rows())); }

// cond_1(A) = |A|_1 |A^-1|_1
inline double condition_estimate(const CMatrix& a) {
    return a.norm_one() * inverse(a).norm_one();
}

inline CMatrix matrix_power(const CMatrix& a, unsigned n) {
    if (!a.square()) throw DimensionError("matrix_power: square matrix required");
    CMatrix r = CMatrix::identity(a.rows());
    CMatrix base = a;
    while (n > 0) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return r;
}

}  // namespace gybe
