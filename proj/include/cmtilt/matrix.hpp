// Dense exact matrices and the elimination kernels everything else reduces to.
#pragma once

#include <cassert>
#include <optional>
#include <sstream>
#include <vector>

#include "cmtilt/field.hpp"

namespace cmtilt {

template <class F>
struct Matrix {
    using Elt = typename F::Elt;

    F K;
    int rows = 0, cols = 0;
    std::vector<Elt> a;  // row-major

    Matrix() = default;
    Matrix(F k, int r, int c) : K(k), rows(r), cols(c), a(static_cast<size_t>(r) * c, k.zero()) {}

    Elt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(F k, int n) {
        Matrix m(k, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
        return m;
    }
    static Matrix zero(F k, int r, int c) { return Matrix(k, r, c); }

    bool is_zero() const {
        for (const auto& x : a)
            if (!K.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!K.eq(a[i], o.a[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        assert(rows == o.rows && cols == o.cols);
        Matrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = K.add(r.a[i], o.a[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows == o.rows && cols == o.cols);
        Matrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = K.sub(r.a[i], o.a[i]);
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a) x = K.neg(x);
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        assert(cols == o.rows);
        Matrix r(K, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int l = 0; l < cols; ++l) {
                const Elt& x = at(i, l);
                if (K.is_zero(x)) continue;
                for (int j = 0; j < o.cols; ++j) {
                    if (K.is_zero(o.at(l, j))) continue;
                    r.at(i, j) = K.add(r.at(i, j), K.mul(x, o.at(l, j)));
                }
            }
        return r;
    }
    Matrix scaled(const Elt& c) const {
        Matrix r = *this;
        for (auto& x : r.a) x = K.mul(x, c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(K, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Elt> apply(const std::vector<Elt>& v) const {
        assert(static_cast<int>(v.size()) == cols);
        std::vector<Elt> r(rows, K.zero());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!K.is_zero(at(i, j)) && !K.is_zero(v[j]))
                    r[i] = K.add(r[i], K.mul(at(i, j), v[j]));
        return r;
    }

    Matrix col(int j) const {
        Matrix r(K, rows, 1);
        for (int i = 0; i < rows; ++i) r.at(i, 0) = at(i, j);
        return r;
    }
    std::vector<Elt> col_vec(int j) const {
        std::vector<Elt> v(rows, K.zero());
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
    void set_col(int j, const std::vector<Elt>& v) {
        assert(static_cast<int>(v.size()) == rows);
        for (int i = 0; i < rows; ++i) at(i, j) = v[i];
    }

    // column selection
    Matrix cols_of(const std::vector<int>& idx) const {
        Matrix r(K, rows, static_cast<int>(idx.size()));
        for (int j = 0; j < r.cols; ++j)
            for (int i = 0; i < rows; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }

    static Matrix hstack(const Matrix& l, const Matrix& r) {
        assert(l.rows == r.rows);
        Matrix m(l.K, l.rows, l.cols + r.cols);
        for (int i = 0; i < l.rows; ++i) {
            for (int j = 0; j < l.cols; ++j) m.at(i, j) = l.at(i, j);
            for (int j = 0; j < r.cols; ++j) m.at(i, l.cols + j) = r.at(i, j);
        }
        return m;
    }
    static Matrix vstack(const Matrix& t, const Matrix& b) {
        assert(t.cols == b.cols);
        Matrix m(t.K, t.rows + b.rows, t.cols);
        for (int i = 0; i < t.rows; ++i)
            for (int j = 0; j < t.cols; ++j) m.at(i, j) = t.at(i, j);
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) m.at(t.rows + i, j) = b.at(i, j);
        return m;
    }

    // block-diagonal assembly
    static Matrix block_diag(const std::vector<Matrix>& blocks, F k) {
        int r = 0, c = 0;
        for (const auto& b : blocks) { r += b.rows; c += b.cols; }
        Matrix m(k, r, c);
        int ro = 0, co = 0;
        for (const auto& b : blocks) {
            for (int i = 0; i < b.rows; ++i)
                for (int j = 0; j < b.cols; ++j) m.at(ro + i, co + j) = b.at(i, j);
            ro += b.rows; co += b.cols;
        }
        return m;
    }

    // Kronecker product, row-major index pairing (i1,i2) -> i1*rows2+i2.
    Matrix kron(const Matrix& o) const {
        Matrix r(K, rows * o.rows, cols * o.cols);
        for (int i1 = 0; i1 < rows; ++i1)
            for (int j1 = 0; j1 < cols; ++j1) {
                if (K.is_zero(at(i1, j1))) continue;
                for (int i2 = 0; i2 < o.rows; ++i2)
                    for (int j2 = 0; j2 < o.cols; ++j2)
                        r.at(i1 * o.rows + i2, j1 * o.cols + j2) =
                            K.mul(at(i1, j1), o.at(i2, j2));
            }
        return r;
    }

    typename F::Elt trace() const {
        assert(rows == cols);
        Elt t = K.zero();
        for (int i = 0; i < rows; ++i) t = K.add(t, at(i, i));
        return t;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (j) os << ' ';
                os << K.to_string(at(i, j));
            }
            if (i + 1 < rows) os << "; ";
        }
        return os.str();
    }
};

/// Row echelon data: R = reduced row echelon form of the input, pivots[k] =
/// column of the k-th pivot. When wanted, T is invertible with T*M = R.
template <class F>
struct Echelon {
    Matrix<F> R;
    std::vector<int> pivots;
    int rank = 0;
    std::optional<Matrix<F>> T;
};

template <class F>
Echelon<F> rref(const Matrix<F>& m, bool want_transform = false) {
    const F& K = m.K;
    Echelon<F> e;
    e.R = m;
    Matrix<F> T = Matrix<F>::identity(K, m.rows);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!K.is_zero(e.R.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(e.R.at(piv, j), e.R.at(r, j));
            if (want_transform)
                for (int j = 0; j < m.rows; ++j) std::swap(T.at(piv, j), T.at(r, j));
        }
        auto ip = K.inv(e.R.at(r, c));
        for (int j = 0; j < m.cols; ++j) e.R.at(r, j) = K.mul(e.R.at(r, j), ip);
        if (want_transform)
            for (int j = 0; j < m.rows; ++j) T.at(r, j) = K.mul(T.at(r, j), ip);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || K.is_zero(e.R.at(i, c))) continue;
            auto f = e.R.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                e.R.at(i, j) = K.sub(e.R.at(i, j), K.mul(f, e.R.at(r, j)));
            if (want_transform)
                for (int j = 0; j < m.rows; ++j)
                    T.at(i, j) = K.sub(T.at(i, j), K.mul(f, T.at(r, j)));
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    if (want_transform) e.T = std::move(T);
    return e;
}

template <class F>
int rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Basis of the right null space, returned as columns of a matrix.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F& K = m.K;
    auto e = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : e.pivots) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix<F> ker(K, m.cols, static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        ker.at(fc, k) = K.one();
        for (int pr = 0; pr < e.rank; ++pr)
            ker.at(e.pivots[pr], k) = K.neg(e.R.at(pr, fc));
    }
    return ker;
}

/// Some solution x of m*x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Elt>> solve(const Matrix<F>& m,
                                                  const std::vector<typename F::Elt>& b) {
    const F& K = m.K;
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<F> bm(K, m.rows, 1);
    for (int i = 0; i < m.rows; ++i) bm.at(i, 0) = b[i];
    auto e = rref(Matrix<F>::hstack(m, bm));
    std::vector<typename F::Elt> x(m.cols, K.zero());
    for (int pr = 0; pr < e.rank; ++pr) {
        if (e.pivots[pr] == m.cols) return std::nullopt;  // pivot in the rhs column
        x[e.pivots[pr]] = e.R.at(pr, m.cols);
    }
    return x;
}

/// Matrix solution X of m*X = b (columnwise), or nullopt.
template <class F>
std::optional<Matrix<F>> solve_matrix(const Matrix<F>& m, const Matrix<F>& b) {
    const F& K = m.K;
    assert(m.rows == b.rows);
    auto e = rref(Matrix<F>::hstack(m, b));
    Matrix<F> x(K, m.cols, b.cols);
    for (int pr = 0; pr < e.rank; ++pr) {
        if (e.pivots[pr] >= m.cols) return std::nullopt;
        for (int j = 0; j < b.cols; ++j) x.at(e.pivots[pr], j) = e.R.at(pr, m.cols + j);
    }
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    assert(m.rows == m.cols);
    auto e = rref(m, true);
    if (e.rank != m.rows) return std::nullopt;
    return e.T;
}

/// Column space: echelonized basis (as columns) together with pivot rows.
template <class F>
struct ColBasis {
    Matrix<F> basis;         // columns form the basis, column-echelonized
    std::vector<int> pivot_rows;
    int dim() const { return basis.cols; }
};

template <class F>
ColBasis<F> column_space(const Matrix<F>& m) {
    auto e = rref(m.transpose());
    ColBasis<F> cb;
    cb.basis = Matrix<F>(m.K, m.rows, e.rank);
    cb.pivot_rows = e.pivots;
    for (int k = 0; k < e.rank; ++k)
        for (int i = 0; i < m.rows; ++i) cb.basis.at(i, k) = e.R.at(k, i);
    return cb;
}

/// Coordinates of v in an echelonized column basis; nullopt if not a member.
template <class F>
std::optional<std::vector<typename F::Elt>> coords_in(const ColBasis<F>& cb,
                                                      const std::vector<typename F::Elt>& v) {
    const F& K = cb.basis.K;
    std::vector<typename F::Elt> c(cb.basis.cols, K.zero());
    std::vector<typename F::Elt> rem = v;
    for (int k = 0; k < cb.basis.cols; ++k) {
        int pr = cb.pivot_rows[k];
        c[k] = rem[pr];  // pivot entries are 1 and unique to their column
        if (!K.is_zero(c[k]))
            for (int i = 0; i < cb.basis.rows; ++i)
                rem[i] = K.sub(rem[i], K.mul(c[k], cb.basis.at(i, k)));
    }
    for (const auto& x : rem)
        if (!K.is_zero(x)) return std::nullopt;
    return c;
}

/// Characteristic polynomial det(tI - m) by the Hessenberg method.
/// Coefficients returned in ascending order, leading coefficient 1.
template <class F>
std::vector<typename F::Elt> charpoly(const Matrix<F>& m) {
    const F& K = m.K;
    assert(m.rows == m.cols);
    int n = m.rows;
    Matrix<F> h = m;
    // reduce to upper Hessenberg by exact similarity transforms
    for (int c = 0; c < n - 2; ++c) {
        int piv = -1;
        for (int i = c + 1; i < n; ++i)
            if (!K.is_zero(h.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != c + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
        }
        auto ip = K.inv(h.at(c + 1, c));
        for (int i = c + 2; i < n; ++i) {
            if (K.is_zero(h.at(i, c))) continue;
            auto f = K.mul(h.at(i, c), ip);
            for (int j = 0; j < n; ++j) h.at(i, j) = K.sub(h.at(i, j), K.mul(f, h.at(c + 1, j)));
            for (int j = 0; j < n; ++j) h.at(j, c + 1) = K.add(h.at(j, c + 1), K.mul(f, h.at(j, i)));
        }
    }
    // p_k(t) = charpoly of leading k x k block of the Hessenberg form
    std::vector<std::vector<typename F::Elt>> p(n + 1);
    p[0] = {K.one()};
    for (int k = 1; k <= n; ++k) {
        // p_k = (t - h[k-1][k-1]) p_{k-1} - sum_{i=1..k-1} h[k-1-i][k-1] (prod subdiag) p_{k-1-i}
        std::vector<typename F::Elt> pk(k + 1, K.zero());
        for (int d = 0; d < k; ++d) {
            pk[d + 1] = K.add(pk[d + 1], p[k - 1][d]);
            pk[d] = K.sub(pk[d], K.mul(h.at(k - 1, k - 1), p[k - 1][d]));
        }
        auto prod = K.one();
        for (int i = 1; i < k; ++i) {
            prod = K.mul(prod, h.at(k - i, k - i - 1));
            if (K.is_zero(prod)) break;
            auto coef = K.mul(h.at(k - 1 - i, k - 1), prod);
            if (K.is_zero(coef)) continue;
            for (int d = 0; d <= k - 1 - i; ++d)
                pk[d] = K.sub(pk[d], K.mul(coef, p[k - 1 - i][d]));
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

/// m^e by repeated squaring.
template <class F>
Matrix<F> mat_pow(const Matrix<F>& m, unsigned long e) {
    assert(m.rows == m.cols);
    Matrix<F> r = Matrix<F>::identity(m.K, m.rows);
    Matrix<F> b = m;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

}  // namespace cmtilt
