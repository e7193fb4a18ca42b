#pragma once

#include <optional>
#include <vector>

#include "superyang/errors.hpp"
#include "superyang/poly.hpp"

namespace superyang {

/// Dense row-major matrix over a field K (K needs ScalarTraits and exact
/// division). Sized for the moderate dimensions where dense elimination is
/// viable; large operators stay in sparse applied form and never come here.
template <class K>
class Mat {
public:
    Mat() = default;
    Mat(long rows, long cols) : r_(rows), c_(cols), a_(rows * cols, ScalarTraits<K>::zero()) {}

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = ScalarTraits<K>::one();
        return m;
    }
    static Mat from_columns(long rows, const std::vector<std::vector<K>>& cols) {
        Mat m(rows, static_cast<long>(cols.size()));
        for (long j = 0; j < m.cols(); ++j) {
            if (static_cast<long>(cols[j].size()) != rows)
                throw DomainError("column length mismatch");
            for (long i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    long rows() const { return r_; }
    long cols() const { return c_; }
    K& at(long i, long j) { return a_[i * c_ + j]; }
    const K& at(long i, long j) const { return a_[i * c_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!ScalarTraits<K>::is_zero(x)) return false;
        return true;
    }

    std::vector<K> column(long j) const {
        std::vector<K> out;
        out.reserve(r_);
        for (long i = 0; i < r_; ++i) out.push_back(at(i, j));
        return out;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DomainError("matrix shape mismatch");
        Mat out(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
        return out;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DomainError("matrix shape mismatch");
        Mat out(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
        return out;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw DomainError("matrix shape mismatch");
        Mat out(a.r_, b.c_);
        for (long i = 0; i < a.r_; ++i)
            for (long k = 0; k < a.c_; ++k) {
                const K& x = a.at(i, k);
                if (ScalarTraits<K>::is_zero(x)) continue;
                for (long j = 0; j < b.c_; ++j) out.at(i, j) = out.at(i, j) + x * b.at(k, j);
            }
        return out;
    }
    Mat scaled(const K& s) const {
        Mat out(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    long r_ = 0, c_ = 0;
    std::vector<K> a_;
};

template <class K>
std::vector<K> mat_apply(const Mat<K>& a, const std::vector<K>& x) {
    if (a.cols() != static_cast<long>(x.size())) throw DomainError("matrix shape mismatch");
    std::vector<K> out(a.rows(), ScalarTraits<K>::zero());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (!ScalarTraits<K>::is_zero(a.at(i, j))) out[i] = out[i] + a.at(i, j) * x[j];
    return out;
}

/// In-place reduced row echelon form; returns the pivot column indices in
/// increasing order. Pivot choice (first nonzero entry) is deterministic.
template <class K>
std::vector<long> mat_rref(Mat<K>& m) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long p = -1;
        for (long i = row; i < m.rows(); ++i)
            if (!ScalarTraits<K>::is_zero(m.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (long j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        const K inv = ScalarTraits<K>::one() / m.at(row, col);
        for (long j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (long i = 0; i < m.rows(); ++i) {
            if (i == row || ScalarTraits<K>::is_zero(m.at(i, col))) continue;
            const K f = m.at(i, col);
            for (long j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
long mat_rank(Mat<K> m) {
    return static_cast<long>(mat_rref(m).size());
}

/// Basis of the right null space, one vector per free column, in increasing
/// free-column order (deterministic).
template <class K>
std::vector<std::vector<K>> mat_kernel(Mat<K> m) {
    const std::vector<long> pivots = mat_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (long f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols(), ScalarTraits<K>::zero());
        v[f] = ScalarTraits<K>::one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = ScalarTraits<K>::zero() - m.at(static_cast<long>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Any solution of A x = b, or nullopt if the system is inconsistent.
template <class K>
std::optional<std::vector<K>> mat_solve(const Mat<K>& a, const std::vector<K>& b) {
    if (a.rows() != static_cast<long>(b.size())) throw DomainError("matrix shape mismatch");
    Mat<K> aug(a.rows(), a.cols() + 1);
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const std::vector<long> pivots = mat_rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<K> x(a.cols(), ScalarTraits<K>::zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<long>(r), a.cols());
    return x;
}

/// Inverse of a square matrix; NoSolution if singular.
template <class K>
Mat<K> mat_inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    const long n = m.rows();
    Mat<K> aug(n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = ScalarTraits<K>::one();
    }
    const std::vector<long> pivots = mat_rref(aug);
    if (static_cast<long>(pivots.size()) < n || pivots[n - 1] != n - 1)
        throw NoSolution("matrix is singular");
    Mat<K> inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Coordinate map onto the column span of a fixed rational basis matrix.
/// Construction checks the columns are independent; coords() checks exact
/// membership, so using it doubles as a closure check for invariant subspaces.
class SpanSolver {
public:
    explicit SpanSolver(Mat<Rational> basis) : b_(std::move(basis)) {
        Mat<Rational> work = b_;
        const std::vector<long> piv = mat_rref(work);
        if (static_cast<long>(piv.size()) != b_.cols())
            throw VerificationError("basis columns are dependent");
        // rref pivots of B^T give independent rows; recompute via a transpose.
        Mat<Rational> t(b_.cols(), b_.rows());
        for (long i = 0; i < b_.rows(); ++i)
            for (long j = 0; j < b_.cols(); ++j) t.at(j, i) = b_.at(i, j);
        prows_ = mat_rref(t);  // pivot columns of B^T = row indices of B
        Mat<Rational> square(b_.cols(), b_.cols());
        for (long r = 0; r < b_.cols(); ++r)
            for (long j = 0; j < b_.cols(); ++j) square.at(r, j) = b_.at(prows_[r], j);
        inv_ = mat_inverse(square);
    }

    long ambient() const { return b_.rows(); }
    long dim() const { return b_.cols(); }
    const Mat<Rational>& basis() const { return b_; }

    /// Coordinates of v in the basis columns; VerificationError if v is not
    /// in the span. V is any module over the rationals (Poly1, RatFun, ...).
    template <class V>
    std::vector<V> coords(const std::vector<V>& v) const {
        if (static_cast<long>(v.size()) != b_.rows()) throw DomainError("vector length mismatch");
        std::vector<V> x(b_.cols(), ScalarTraits<V>::zero());
        for (long r = 0; r < b_.cols(); ++r)
            for (long j = 0; j < b_.cols(); ++j) {
                const Rational& c = inv_.at(r, j);
                if (sgn(c) != 0)
                    x[r] = x[r] + v[prows_[j]] * ScalarTraits<V>::from_rational(c);
            }
        // Exact membership check: B x must reproduce v entrywise.
        for (long i = 0; i < b_.rows(); ++i) {
            V acc = ScalarTraits<V>::zero();
            for (long j = 0; j < b_.cols(); ++j) {
                const Rational& c = b_.at(i, j);
                if (sgn(c) != 0) acc = acc + x[j] * ScalarTraits<V>::from_rational(c);
            }
            if (!ScalarTraits<V>::is_zero(acc - v[i]))
                throw VerificationError("vector lies outside the spanned subspace");
        }
        return x;
    }

private:
    Mat<Rational> b_;
    Mat<Rational> inv_;
    std::vector<long> prows_;
};

}  // namespace superyang
