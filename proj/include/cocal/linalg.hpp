#pragma once

#include "cocal/rational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

namespace cocal {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;  // row major

template <class F>
Mat<F> mat_zero(int r, int c) {
    return Mat<F>(r, Vec<F>(c, F(0)));
}

template <class F>
Mat<F> mat_identity(int n) {
    Mat<F> m = mat_zero<F>(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = F(1);
    return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
    assert(!a.empty() && a[0].size() == b.size());
    Mat<F> c = mat_zero<F>((int)a.size(), (int)b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (is_zero(a[i][k])) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

template <class F>
Vec<F> mat_apply(const Mat<F>& a, const Vec<F>& x) {
    Vec<F> y(a.size(), F(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (!is_zero(a[i][j]) && !is_zero(x[j])) y[i] += a[i][j] * x[j];
    return y;
}

// In-place reduced row echelon form. Returns pivot columns.
template <class F>
std::vector<int> rref(Mat<F>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size(), r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        F inv = F(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            F f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int mat_rank(Mat<F> m) {
    return (int)rref(m).size();
}

// Basis of the right kernel {x : m x = 0}.
template <class F>
Mat<F> kernel_basis(Mat<F> m, int cols) {
    if (m.empty()) m = mat_zero<F>(1, cols);
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    Mat<F> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        Vec<F> v(cols, F(0));
        v[c] = F(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][c];
        basis.push_back(v);
    }
    return basis;
}

// One solution of m x = b, if any.
template <class F>
std::optional<Vec<F>> solve(Mat<F> m, Vec<F> b) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<int> piv = rref(m);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;  // inconsistent
    Vec<F> x(cols, F(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
    return x;
}

template <class F>
std::optional<Mat<F>> mat_inverse(const Mat<F>& a) {
    int n = (int)a.size();
    Mat<F> m = a;
    for (int i = 0; i < n; ++i) {
        Vec<F> id(n, F(0));
        id[i] = F(1);
        m[i].insert(m[i].end(), id.begin(), id.end());
    }
    std::vector<int> piv = rref(m);
    if ((int)piv.size() != n) return std::nullopt;
    Mat<F> inv = mat_zero<F>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

template <class F>
F mat_det(Mat<F> m) {
    int n = (int)m.size();
    F det = F(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(m[i][c])) {
                p = i;
                break;
            }
        if (p < 0) return F(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        F inv = F(1) / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(m[i][c])) continue;
            F f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// Signature of a symmetric matrix by exact congruence reduction.
struct Signature {
    int pos = 0, neg = 0, zero = 0;
    bool definite() const { return zero == 0 && (pos == 0 || neg == 0); }
};

template <class F>
Signature signature(Mat<F> s) {
    int n = (int)s.size();
    Signature sig;
    int r = 0;
    while (r < n) {
        if (is_zero(s[r][r])) {
            // look for a later nonzero diagonal entry, else create one
            int p = -1;
            for (int i = r + 1; i < n; ++i)
                if (!is_zero(s[i][i])) {
                    p = i;
                    break;
                }
            if (p >= 0) {
                std::swap(s[r], s[p]);
                for (int i = 0; i < n; ++i) std::swap(s[i][r], s[i][p]);
            } else {
                int a = -1, b = -1;
                for (int i = r; i < n && a < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!is_zero(s[i][j])) {
                            a = i;
                            b = j;
                            break;
                        }
                if (a < 0) {
                    sig.zero += n - r;
                    break;
                }
                // row/col a += row/col b puts 2*s[a][b] on the diagonal
                for (int j = 0; j < n; ++j) s[a][j] += s[b][j];
                for (int i = 0; i < n; ++i) s[i][a] += s[i][b];
                if (a != r) {
                    std::swap(s[r], s[a]);
                    for (int i = 0; i < n; ++i) std::swap(s[i][r], s[i][a]);
                }
            }
        }
        F d = s[r][r];
        if (field_sign(d) > 0)
            ++sig.pos;
        else
            ++sig.neg;
        for (int i = r + 1; i < n; ++i) {
            if (is_zero(s[i][r])) continue;
            F f = s[i][r] / d;
            for (int j = r; j < n; ++j) s[i][j] -= f * s[r][j];
            for (int j = r; j < n; ++j) s[j][i] -= f * s[j][r];
        }
        ++r;
    }
    return sig;
}

// ---------------------------------------------------------------------------
// Rational polynomials, monic conventions; coefficient c[i] multiplies x^i.

using Poly = std::vector<Rat>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    return p;
}
inline int poly_deg(const Poly& p) { return (int)p.size() - 1; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// (quotient, remainder) of a / b.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    a = poly_trim(a);
    Poly bb = poly_trim(b);
    if (bb.empty()) throw std::domain_error("poly division by zero");
    Poly q(std::max<int>(0, (int)a.size() - (int)bb.size() + 1), Rat(0));
    while (a.size() >= bb.size() && !a.empty()) {
        Rat f = a.back() / bb.back();
        size_t shift = a.size() - bb.size();
        q[shift] = f;
        for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
        a = poly_trim(a);
    }
    return {poly_trim(q), a};
}

inline Poly poly_monic(Poly p) {
    p = poly_trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return poly_monic(a);
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (int i = (int)p.size() - 1; i >= 0; --i) v = v * x + p[i];
    return v;
}

// All rational roots with multiplicity stripped (set of distinct roots).
std::vector<Rat> poly_rational_roots(const Poly& p);

// Characteristic polynomial (monic) via Faddeev-LeVerrier.
Poly char_poly(const Mat<Rat>& a);

// Minimal polynomial (monic) via Krylov relations.
Poly min_poly(const Mat<Rat>& a);

}  // namespace cocal
