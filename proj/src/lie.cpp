#include "cocal/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace cocal {

Vec<Rat> bracket_basis(const LieAlgebra& g, int i, int j) {
    Vec<Rat> v(g.dim, Rat(0));
    if (i == j) return v;
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    Mask m = mask_of({i, j});
    for (int k = 0; k < g.dim; ++k) {
        Rat c = g.d1[k].coeff(m);
        if (sgn(c) != 0) v[k] = Rat(-sign) * c;
    }
    return v;
}

Vec<Rat> bracket(const LieAlgebra& g, const Vec<Rat>& x, const Vec<Rat>& y) {
    Vec<Rat> v(g.dim, Rat(0));
    for (int i = 0; i < g.dim; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < g.dim; ++j) {
            if (sgn(y[j]) == 0) continue;
            Vec<Rat> b = bracket_basis(g, i + 1, j + 1);
            for (int k = 0; k < g.dim; ++k) v[k] += x[i] * y[j] * b[k];
        }
    }
    return v;
}

bool jacobi_check(const LieAlgebra& g) {
    for (int k = 0; k < g.dim; ++k) {
        if (g.d1[k].dim != g.dim || g.d1[k].degree != 2) return false;
        if (!ce_differential(g, g.d1[k]).is_zero_form()) return false;
    }
    return true;
}

Vec<Rat> trace_functional(const LieAlgebra& g) {
    Vec<Rat> xi(g.dim, Rat(0));
    for (int i = 1; i <= g.dim; ++i) {
        Rat tr(0);
        for (int k = 1; k <= g.dim; ++k) tr += bracket_basis(g, i, k)[k - 1];
        xi[i - 1] = tr;
    }
    return xi;
}

bool is_unimodular(const LieAlgebra& g) {
    Vec<Rat> xi = trace_functional(g);
    bool by_trace = true;
    for (auto& t : xi) by_trace &= (sgn(t) == 0);
    bool by_forms = true;
    for (Mask m : all_masks(g.dim, g.dim - 1)) {
        QForm f = monomial<Rat>(g.dim, m);
        by_forms &= ce_differential(g, f).is_zero_form();
    }
    if (by_trace != by_forms)
        throw std::logic_error("unimodularity characterizations disagree (internal bug)");
    return by_trace;
}

Mat<Rat> d_matrix(const LieAlgebra& g, int k) {
    auto dom = all_masks(g.dim, k);
    auto cod = all_masks(g.dim, k + 1);
    Mat<Rat> m = mat_zero<Rat>((int)cod.size(), (int)dom.size());
    for (size_t c = 0; c < dom.size(); ++c) {
        QForm img = ce_differential(g, monomial<Rat>(g.dim, dom[c]));
        for (size_t r = 0; r < cod.size(); ++r) m[r][c] = img.coeff(cod[r]);
    }
    return m;
}

CohomologyVector cohomology(const LieAlgebra& g) {
    if (!jacobi_check(g)) throw std::invalid_argument("cohomology: Jacobi identity fails");
    CohomologyVector hv;
    int prev_rank = 0;  // rank of d on 0-forms
    for (int k = 1; k <= g.dim; ++k) {
        int dim_k = (int)all_masks(g.dim, k).size();
        int rank_k = (k < g.dim) ? mat_rank(d_matrix(g, k)) : 0;
        int ker = dim_k - rank_k;
        hv.h.push_back(ker - prev_rank);
        prev_rank = rank_k;
    }
    return hv;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    LieAlgebra g(a.dim + b.dim);
    if (!a.name.empty() || !b.name.empty()) g.name = a.name + "+" + b.name;
    for (int k = 0; k < a.dim; ++k)
        for (auto& [m, c] : a.d1[k].terms) g.d1[k].add_term(m, c);
    for (int k = 0; k < b.dim; ++k)
        for (auto& [m, c] : b.d1[k].terms) g.d1[a.dim + k].add_term(m << a.dim, c);
    return g;
}

namespace {

// Coordinates of v in the span of rows, if it lies there.
std::optional<Vec<Rat>> coords_in_span(const Mat<Rat>& rows, const Vec<Rat>& v) {
    int n = (int)v.size();
    Mat<Rat> sys = mat_zero<Rat>(n, (int)rows.size());
    for (int r = 0; r < n; ++r)
        for (size_t c = 0; c < rows.size(); ++c) sys[r][c] = rows[c][r];
    return solve(sys, v);
}

}  // namespace

LieAlgebra subalgebra(const LieAlgebra& g, const Mat<Rat>& rows, const std::string& name) {
    int m = (int)rows.size();
    LieAlgebra s(m, name);
    // structure constants from brackets expressed in the row basis
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vec<Rat> br = bracket(g, rows[i], rows[j]);
            auto co = coords_in_span(rows, br);
            if (!co) throw std::invalid_argument("subalgebra: span not closed under bracket");
            for (int k = 0; k < m; ++k)
                if (sgn((*co)[k]) != 0) s.d1[k].add_term(mask_of({i + 1, j + 1}), -(*co)[k]);
        }
    return s;
}

bool is_ideal(const LieAlgebra& g, const Mat<Rat>& rows) {
    for (int i = 1; i <= g.dim; ++i) {
        Vec<Rat> ei(g.dim, Rat(0));
        ei[i - 1] = Rat(1);
        for (auto& r : rows)
            if (!coords_in_span(rows, bracket(g, ei, r))) return false;
    }
    return true;
}

bool is_abelian_subspace(const LieAlgebra& g, const Mat<Rat>& rows) {
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) {
            Vec<Rat> br = bracket(g, rows[i], rows[j]);
            for (auto& c : br)
                if (sgn(c) != 0) return false;
        }
    return true;
}

Mat<Rat> commutator_basis(const LieAlgebra& g) {
    Mat<Rat> span;
    for (int i = 1; i <= g.dim; ++i)
        for (int j = i + 1; j <= g.dim; ++j) span.push_back(bracket_basis(g, i, j));
    rref(span);
    Mat<Rat> basis;
    for (auto& r : span) {
        bool nz = false;
        for (auto& c : r) nz |= (sgn(c) != 0);
        if (nz) basis.push_back(r);
    }
    return basis;
}

int commutator_dim(const LieAlgebra& g) { return (int)commutator_basis(g).size(); }

Mat<Rat> centralizer_basis(const LieAlgebra& g, const Mat<Rat>& rows) {
    // x with [x, r] = 0 for all generators r
    Mat<Rat> sys;
    for (auto& r : rows)
        for (int k = 0; k < g.dim; ++k) {
            Vec<Rat> eq(g.dim, Rat(0));
            for (int i = 1; i <= g.dim; ++i) {
                Vec<Rat> ei(g.dim, Rat(0));
                ei[i - 1] = Rat(1);
                eq[i - 1] = bracket(g, ei, r)[k];
            }
            sys.push_back(eq);
        }
    if (sys.empty()) return mat_identity<Rat>(g.dim);
    return kernel_basis(sys, g.dim);
}

Mat<Rat> center_basis(const LieAlgebra& g) {
    return centralizer_basis(g, mat_identity<Rat>(g.dim));
}

KernelResult unimodular_kernel(const LieAlgebra& g) {
    Vec<Rat> xi = trace_functional(g);
    bool nz = false;
    for (auto& t : xi) nz |= (sgn(t) != 0);
    if (!nz) throw std::invalid_argument("unimodular_kernel: algebra is unimodular");
    Mat<Rat> sys{xi};
    KernelResult res;
    res.xi = xi;
    res.basis = kernel_basis(sys, g.dim);
    res.algebra = subalgebra(g, res.basis, g.name.empty() ? "" : g.name + ".u");
    return res;
}

std::optional<Mat<Rat>> abelian_codim1_ideal(const LieAlgebra& g) {
    int n = g.dim;
    if (commutator_dim(g) == 0) {
        Mat<Rat> rows;
        for (int i = 0; i + 1 < n; ++i) {
            Vec<Rat> v(n, Rat(0));
            v[i] = Rat(1);
            rows.push_back(v);
        }
        return rows;
    }
    if (!is_unimodular(g)) {
        KernelResult k = unimodular_kernel(g);
        if (is_abelian_subspace(g, k.basis)) return k.basis;
        return std::nullopt;
    }
    Mat<Rat> comm = commutator_basis(g);
    Mat<Rat> cent = centralizer_basis(g, comm);
    if ((int)cent.size() < n - 1) return std::nullopt;
    if ((int)cent.size() == n - 1) {
        // the centralizer of [g,g] is the only candidate hyperplane
        bool contains_comm = true;
        for (auto& c : comm) contains_comm &= coords_in_span(cent, c).has_value();
        if (contains_comm && is_abelian_subspace(g, cent)) return cent;
        return std::nullopt;
    }
    // [g, [g,g]] = 0: two-step nilpotent. An abelian hyperplane must contain
    // the center; its image in g/Z is a hyperplane killing the induced bracket.
    Mat<Rat> z = center_basis(g);
    int zdim = (int)z.size();
    // complement of Z spanned by standard vectors not pivotal for Z
    Mat<Rat> zr = z;
    std::vector<int> piv = rref(zr);
    std::vector<bool> used(n, false);
    for (int p : piv) used[p] = true;
    std::vector<int> comp;
    for (int i = 0; i < n; ++i)
        if (!used[i]) comp.push_back(i);
    int m = (int)comp.size();
    if (m == 0) return std::nullopt;  // abelian handled above
    // conditions: for each target coordinate k, omega_k ^ eta = 0 in Lambda^3
    // of the m-dimensional quotient (valid for m <= 4)
    if (m > 4) return std::nullopt;
    std::vector<QForm> omegas;
    for (int k = 0; k < n; ++k) {
        QForm w(m, 2);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                Vec<Rat> ea(n, Rat(0)), eb(n, Rat(0));
                ea[comp[a]] = Rat(1);
                eb[comp[b]] = Rat(1);
                w.add_term(mask_of({a + 1, b + 1}), bracket(g, ea, eb)[k]);
            }
        omegas.push_back(w);
    }
    Mat<Rat> sys;
    auto rows3 = all_masks(m, 3);
    for (auto& w : omegas) {
        if (w.is_zero_form()) continue;
        for (Mask r : rows3) {
            Vec<Rat> eq(m, Rat(0));
            for (int j = 1; j <= m; ++j) {
                QForm eta = monomial<Rat>(m, 1u << (j - 1));
                eq[j - 1] = wedge(w, eta).coeff(r);
            }
            sys.push_back(eq);
        }
    }
    Mat<Rat> etas = sys.empty() ? mat_identity<Rat>(m) : kernel_basis(sys, m);
    if (etas.empty()) return std::nullopt;
    Vec<Rat> eta = etas[0];
    // hyperplane rows: Z plus the kernel of eta inside the complement
    Mat<Rat> esys{eta};
    Mat<Rat> ker = kernel_basis(esys, m);
    Mat<Rat> rows = z;
    for (auto& kv : ker) {
        Vec<Rat> v(n, Rat(0));
        for (int a = 0; a < m; ++a) v[comp[a]] = kv[a];
        rows.push_back(v);
    }
    if ((int)rows.size() != n - 1) return std::nullopt;
    if (!is_abelian_subspace(g, rows)) return std::nullopt;
    return rows;
}

bool is_almost_abelian(const LieAlgebra& g) { return abelian_codim1_ideal(g).has_value(); }

std::string bianchi_name(const Bianchi3Class& c) {
    switch (c.family) {
        case Bianchi::R3: return "R3";
        case Bianchi::h3: return "h3";
        case Bianchi::e2: return "e(2)";
        case Bianchi::e11: return "e(1,1)";
        case Bianchi::so3: return "so(3)";
        case Bianchi::so21: return "so(2,1)";
        case Bianchi::r2R: return "r2+R";
        case Bianchi::r3: return "r3";
        case Bianchi::r3mu: return "r3mu^{" + rat_str(c.mu) + "}";
        case Bianchi::r3pmu: return "r3'mu^{" + rat_str(c.mu) + "}";
    }
    return "?";
}

Bianchi3Class classify_3d(const LieAlgebra& g) {
    if (g.dim != 3) throw std::invalid_argument("classify_3d: dimension must be 3");
    if (!jacobi_check(g)) throw std::invalid_argument("classify_3d: Jacobi identity fails");
    if (is_unimodular(g)) {
        // Milnor tensor: de^i = M_i1 e^23 - M_i2 e^13 + M_i3 e^12, symmetric here
        Mat<Rat> mm = mat_zero<Rat>(3, 3);
        for (int i = 0; i < 3; ++i) {
            mm[i][0] = g.d1[i].coeff(mask_of({2, 3}));
            mm[i][1] = -g.d1[i].coeff(mask_of({1, 3}));
            mm[i][2] = g.d1[i].coeff(mask_of({1, 2}));
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (mm[i][j] != mm[j][i])
                    throw std::logic_error("classify_3d: unimodular tensor not symmetric");
        Signature sig = signature(mm);
        int rank = sig.pos + sig.neg;
        if (rank == 3) return {sig.definite() ? Bianchi::so3 : Bianchi::so21, Rat(0)};
        if (rank == 2) return {(sig.pos == 2 || sig.neg == 2) ? Bianchi::e2 : Bianchi::e11, Rat(0)};
        if (rank == 1) return {Bianchi::h3, Rat(0)};
        return {Bianchi::R3, Rat(0)};
    }
    // non-unimodular: d acts on the kernel annihilator complement by a 2x2 map f
    Vec<Rat> xi = trace_functional(g);
    int pivot = 0;
    while (sgn(xi[pivot]) == 0) ++pivot;
    Vec<Rat> e3(3, Rat(0));
    e3[pivot] = Rat(1) / xi[pivot];  // xi(e3) = 1
    // basis of Ann(e3) among 1-forms
    Mat<Rat> w2;
    for (int i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        Vec<Rat> wv(3, Rat(0));
        wv[i] = Rat(1);
        w2.push_back(wv);
    }
    KVector<Rat> ve(3, 1);
    for (int i = 0; i < 3; ++i)
        if (sgn(e3[i]) != 0) ve.add_term(1u << i, e3[i]);
    Mat<Rat> f = mat_zero<Rat>(2, 2);
    for (int c = 0; c < 2; ++c) {
        QForm alpha(3, 1);
        for (int i = 0; i < 3; ++i)
            if (sgn(w2[c][i]) != 0) alpha.add_term(1u << i, w2[c][i]);
        QForm fa = rat(-1) * contract(ve, ce_differential(g, alpha));
        // express fa in the w2 basis; e3-component must vanish
        Mat<Rat> sys = mat_zero<Rat>(3, 2);
        Vec<Rat> rhs(3, Rat(0));
        for (int i = 0; i < 3; ++i) {
            sys[i][0] = w2[0][i];
            sys[i][1] = w2[1][i];
            rhs[i] = fa.coeff(1u << i);
        }
        auto sol = solve(sys, rhs);
        if (!sol) throw std::logic_error("classify_3d: f does not preserve the kernel");
        f[0][c] = (*sol)[0];
        f[1][c] = (*sol)[1];
    }
    Rat tr = f[0][0] + f[1][1];
    Rat det = f[0][0] * f[1][1] - f[0][1] * f[1][0];
    if (sgn(tr) == 0) throw std::logic_error("classify_3d: non-unimodular with trace-free f");
    if (sgn(det) == 0) return {Bianchi::r2R, Rat(0)};
    Rat disc = tr * tr - det * 4;
    if (sgn(disc) == 0) {
        // double eigenvalue tr/2; scalar iff f - (tr/2) I = 0
        bool scalar = (f[0][1] == 0 && f[1][0] == 0 && f[0][0] == f[1][1]);
        return scalar ? Bianchi3Class{Bianchi::r3mu, Rat(1)} : Bianchi3Class{Bianchi::r3, Rat(0)};
    }
    Rat root;
    if (!rat_is_square(abs(disc), &root))
        throw std::invalid_argument(
            "classify_3d: normal-form parameter is irrational; not representable in the catalog");
    if (sgn(disc) > 0) {
        Rat l1 = (tr + root) / 2, l2 = (tr - root) / 2;
        if (abs(l1) < abs(l2)) std::swap(l1, l2);
        // normalize leading eigenvalue positive, parameter in (-1, 1]
        Rat mu = l2 / l1;
        return {Bianchi::r3mu, mu};
    }
    // complex pair a +- bi with a = tr/2, b = root/2: parameter |a|/b
    Rat mu = abs(tr) / root;
    return {Bianchi::r3pmu, mu};
}

}  // namespace cocal
