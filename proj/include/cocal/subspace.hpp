#pragma once

#include "cocal/lie.hpp"
#include "cocal/multivector.hpp"

#include <optional>
#include <vector>

namespace cocal {

// Two-forms on a four-dimensional space with a fixed reference volume.
struct TwoFormFamily {
    std::vector<QForm> forms;  // dim 4, degree 2, at most 3 of them
    QForm tau;                 // nonzero 4-form
};

TwoFormFamily standard_family(std::vector<QForm> forms);

// H with omega_i ^ omega_j = H[i][j] tau.
Mat<Rat> gram(const TwoFormFamily& fam);
bool is_definite(const Mat<Rat>& h);

// Symplectic (Darboux) coframe of a nondegenerate 2-form in dimension 4:
// returns f with omega = f^1^f^2 + f^3^f^4, exactly.
template <class F>
std::vector<KForm<F>> darboux_coframe(const KForm<F>& omega);

// Coframe realizing an aligned pair: f*(e12+e34) = w1, f*(e13-e24) = w2.
// Requires w1 ^ w2 = 0 and w2^2 = w1^2.
template <class F>
std::vector<KForm<F>> pair_normal_coframe(const KForm<F>& w1, const KForm<F>& w2);

struct SelfdualCompletion {
    std::vector<KForm<Quad>> coframe;  // 4 one-forms, f* of the standard triple spans the family
    std::vector<KForm<Quad>> completed;  // the filled-up triple, first k entries lift the input
};

// Self-dual completion: definite-Gram family -> coframe + completed triple.
// The coframe may live in a quadratic extension (k = 2 with non-square ratio).
SelfdualCompletion complete_to_selfdual_triple(const TwoFormFamily& fam);

// Rational completion of a definite family to a definite triple (pairwise
// wedge-orthogonal, squares of one sign). Used by the rescaling routes that
// only need a valid Hodge-dual formula, not a coframe.
std::vector<QForm> rational_definite_completion(const TwoFormFamily& fam);

// Basis of a D-dimensional subspace of closed 2-forms on g4 in which every
// nonzero element is symplectic, D = h2(g4) - h1(g4) - h1(u) + 4. u_rows
// span the codimension-one unimodular ideal (abelian for almost-Abelian g4,
// else the unimodular kernel, not isomorphic to e(1,1)).
std::vector<QForm> symplectic_subspace(const LieAlgebra& g4, const Mat<Rat>& u_rows);

enum class PairObstruction { None, Zero, H3R2, A57Type };

struct LengthTwoPair {
    bool found = false;
    PairObstruction why = PairObstruction::None;
    QForm omega1, omega2;       // on g5, supported in the ideal; d w1 = w2 ^ e5
    QForm e5form;               // the transversal 1-form the pair is adapted to
    std::vector<QForm> abasis;  // coframe of the ideal (4 one-forms on g5)
};

// Adjoint-shape case analysis for a unimodular almost-Abelian 5d algebra
// with abelian ideal a (rows): a pair with d w1 = w2 ^ e5 whose span has
// definite Gram, or the obstructed shape.
LengthTwoPair length_two_pair_5d(const LieAlgebra& g5, const Mat<Rat>& a_rows);

// --- template implementations ----------------------------------------------

namespace detail {

template <class F>
Mat<F> form_to_matrix(const KForm<F>& w) {
    int n = w.dim;
    Mat<F> m = mat_zero<F>(n, n);
    for (auto& [mask, c] : w.terms) {
        auto ij = mask_indices(mask);
        m[ij[0] - 1][ij[1] - 1] = c;
        m[ij[1] - 1][ij[0] - 1] = -c;
    }
    return m;
}

template <class F>
F eval2(const KForm<F>& w, const Vec<F>& x, const Vec<F>& y) {
    F v(0);
    for (auto& [mask, c] : w.terms) {
        auto ij = mask_indices(mask);
        v += c * (x[ij[0] - 1] * y[ij[1] - 1] - x[ij[1] - 1] * y[ij[0] - 1]);
    }
    return v;
}

// Coframe dual to the given basis rows (rows[i] = coordinates of vector i).
template <class F>
std::vector<KForm<F>> dual_coframe(const Mat<F>& rows) {
    auto inv = mat_inverse(rows);
    if (!inv) throw std::invalid_argument("dual_coframe: basis is singular");
    int n = (int)rows.size();
    std::vector<KForm<F>> cof;
    for (int i = 0; i < n; ++i) {
        Vec<F> col(n);
        for (int j = 0; j < n; ++j) col[j] = (*inv)[j][i];
        cof.push_back(one_form(n, col));
    }
    return cof;
}

}  // namespace detail

template <class F>
std::vector<KForm<F>> darboux_coframe(const KForm<F>& omega) {
    if (omega.dim != 4 || omega.degree != 2)
        throw std::invalid_argument("darboux_coframe: need a 2-form in dimension 4");
    if (is_zero(wedge(omega, omega).coeff(mask_of({1, 2, 3, 4}))))
        throw std::invalid_argument("darboux_coframe: form is degenerate");
    std::vector<Vec<F>> pool;
    for (int i = 0; i < 4; ++i) {
        Vec<F> e(4, F(0));
        e[i] = F(1);
        pool.push_back(e);
    }
    Mat<F> basis;
    for (int round = 0; round < 2; ++round) {
        // pick u with some pairing, v with w(u, v) = 1, then project the pool
        int ui = -1, vi = -1;
        for (size_t i = 0; i < pool.size() && ui < 0; ++i)
            for (size_t j = 0; j < pool.size(); ++j)
                if (i != j && !is_zero(detail::eval2(omega, pool[i], pool[j]))) {
                    ui = (int)i;
                    vi = (int)j;
                    break;
                }
        if (ui < 0) throw std::logic_error("darboux_coframe: degenerate remainder");
        Vec<F> u = pool[ui], v = pool[vi];
        F s = detail::eval2(omega, u, v);
        for (auto& c : v) c /= s;
        basis.push_back(u);
        basis.push_back(v);
        std::vector<Vec<F>> next;
        for (size_t i = 0; i < pool.size(); ++i) {
            if ((int)i == ui || (int)i == vi) continue;
            Vec<F> x = pool[i];
            F a = detail::eval2(omega, v, x);  // x' = x + w(v,x) u - w(u,x) v
            F b = detail::eval2(omega, u, x);
            for (int t = 0; t < 4; ++t) x[t] += a * u[t] - b * v[t];
            bool nz = false;
            for (auto& c : x) nz |= !is_zero(c);
            if (nz) next.push_back(x);
        }
        pool = next;
    }
    auto cof = detail::dual_coframe(basis);
    // sanity: omega must be exactly f^12 + f^34
    KForm<F> check = wedge(cof[0], cof[1]) + wedge(cof[2], cof[3]);
    if (!(check == omega)) throw std::logic_error("darboux_coframe: reconstruction failed");
    return cof;
}

template <class F>
std::vector<KForm<F>> pair_normal_coframe(const KForm<F>& w1, const KForm<F>& w2) {
    Mat<F> m1 = detail::form_to_matrix(w1), m2 = detail::form_to_matrix(w2);
    auto inv = mat_inverse(m1);
    if (!inv) throw std::invalid_argument("pair_normal_coframe: w1 degenerate");
    Mat<F> a = mat_mul(*inv, m2);
    // a^2 = -1 exactly when the pair is aligned
    Mat<F> a2 = mat_mul(a, a);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!is_zero(F(a2[i][j] + (i == j ? F(1) : F(0)))))
                throw std::invalid_argument("pair_normal_coframe: pair is not aligned");
    auto col = [&](const Mat<F>& m, const Vec<F>& x) { return mat_apply(m, x); };
    for (int attempt = 0; attempt < 4; ++attempt) {
        Vec<F> e1(4, F(0));
        e1[attempt] = F(1);
        Vec<F> e4 = col(a, e1);
        for (auto& c : e4) c = -c;
        // e2: w1(e1, e2) = 1, w1(e4, e2) = 0
        Mat<F> sys;
        Vec<F> r1(4), r4(4);
        for (int j = 0; j < 4; ++j) {
            Vec<F> ej(4, F(0));
            ej[j] = F(1);
            r1[j] = detail::eval2(w1, e1, ej);
            r4[j] = detail::eval2(w1, e4, ej);
        }
        sys.push_back(r1);
        sys.push_back(r4);
        auto sol = solve(sys, Vec<F>{F(1), F(0)});
        if (!sol) continue;
        Mat<F> offsets = kernel_basis(sys, 4);
        std::vector<Vec<F>> e2cands{*sol};
        for (auto& k : offsets) {
            Vec<F> alt = *sol;
            for (int t = 0; t < 4; ++t) alt[t] += k[t];
            e2cands.push_back(alt);
        }
        for (auto& e2 : e2cands) {
            Vec<F> e3 = col(a, e2);
            for (auto& c : e3) c = -c;
            Mat<F> basis{e1, e2, e3, e4};
            if (mat_rank(basis) != 4) continue;
            auto cof = detail::dual_coframe(basis);
            KForm<F> c1 = wedge(cof[0], cof[1]) + wedge(cof[2], cof[3]);
            KForm<F> c2 = wedge(cof[0], cof[2]) - wedge(cof[1], cof[3]);
            if (c1 == w1 && c2 == w2) return cof;
        }
    }
    throw std::logic_error("pair_normal_coframe: construction failed");
}

}  // namespace cocal
