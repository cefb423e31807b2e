#pragma once

#include "cocal/linalg.hpp"
#include "cocal/rational.hpp"

#include <bit>
#include <concepts>
#include <cassert>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <vector>

namespace cocal {

// Basis index sets are bitmasks: bit i-1 stands for index i (1-based, dim <= 8).
using Mask = unsigned;

constexpr int MAX_DIM = 8;

inline int mask_card(Mask m) { return std::popcount(m); }

inline Mask mask_of(std::initializer_list<int> idx) {
    Mask m = 0;
    for (int i : idx) m |= 1u << (i - 1);
    return m;
}

inline std::vector<Mask> all_masks(int n, int k) {
    std::vector<Mask> ms;
    for (Mask m = 0; m < (1u << n); ++m)
        if (mask_card(m) == k) ms.push_back(m);
    return ms;
}

inline std::vector<int> mask_indices(Mask m) {
    std::vector<int> v;
    for (int i = 0; i < MAX_DIM; ++i)
        if (m & (1u << i)) v.push_back(i + 1);
    return v;
}

// Sign of reordering the concatenation (sorted A, sorted B) into sorted order.
inline int wedge_sign(Mask a, Mask b) {
    int inv = 0;
    for (int j = 0; j < MAX_DIM; ++j)
        if (b & (1u << j)) inv += std::popcount(a >> (j + 1));
    return (inv & 1) ? -1 : 1;
}

// Sign of extracting index i from the front of sorted set m (i must be in m).
inline int contract_sign(Mask m, int i) {
    int before = std::popcount(m & ((1u << (i - 1)) - 1));
    return (before & 1) ? -1 : 1;
}

// Exact alternating k-form; absent keys are zero coefficients.
template <class F>
struct KForm {
    int dim = 0;
    int degree = 0;
    std::map<Mask, F> terms;

    KForm() = default;
    // degree may exceed the dimension; such forms are identically zero
    KForm(int n, int k) : dim(n), degree(k) {
        if (n < 0 || n > MAX_DIM || k < 0 || k > MAX_DIM + 1)
            throw std::invalid_argument("bad form shape");
    }

    void add_term(Mask m, const F& c) {
        assert(mask_card(m) == degree);
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!is_zero(c)) terms.emplace(m, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    F coeff(Mask m) const {
        auto it = terms.find(m);
        return it == terms.end() ? F(0) : it->second;
    }

    bool is_zero_form() const { return terms.empty(); }

    friend bool operator==(const KForm& x, const KForm& y) {
        return x.dim == y.dim && x.degree == y.degree && x.terms == y.terms;
    }
};

// Same payload, read against the dual space; used for contraction directions
// and the 3-vector side of the 4-form orbit test.
template <class F>
struct KVector {
    int dim = 0;
    int degree = 0;
    std::map<Mask, F> terms;

    KVector() = default;
    KVector(int n, int k) : dim(n), degree(k) {}
    void add_term(Mask m, const F& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!is_zero(c)) terms.emplace(m, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }
    F coeff(Mask m) const {
        auto it = terms.find(m);
        return it == terms.end() ? F(0) : it->second;
    }
};

// Matrix of a coframe substitution: source basis 1-form e^j maps to the
// 1-form with coefficients rows[j] on the target coframe.
template <class F>
struct LinearMap {
    Mat<F> rows;  // rows.size() = source dim, rows[j].size() = target dim
    int src() const { return (int)rows.size(); }
    int dst() const { return rows.empty() ? 0 : (int)rows[0].size(); }
};

template <class F>
KForm<F> monomial(int n, Mask m, const F& c = F(1)) {
    KForm<F> f(n, mask_card(m));
    f.add_term(m, c);
    return f;
}

template <class F>
KForm<F> operator+(const KForm<F>& a, const KForm<F>& b) {
    if (a.dim != b.dim || a.degree != b.degree) throw std::invalid_argument("form shape mismatch");
    KForm<F> r = a;
    for (auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

template <class F>
KForm<F> operator-(const KForm<F>& a, const KForm<F>& b) {
    if (a.dim != b.dim || a.degree != b.degree) throw std::invalid_argument("form shape mismatch");
    KForm<F> r = a;
    for (auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
}

template <class F>
KForm<F> operator-(const KForm<F>& a) {
    KForm<F> r(a.dim, a.degree);
    for (auto& [m, c] : a.terms) r.terms.emplace(m, -c);
    return r;
}

template <class F>
KForm<F> operator*(const F& s, const KForm<F>& a) {
    KForm<F> r(a.dim, a.degree);
    if (is_zero(s)) return r;
    for (auto& [m, c] : a.terms) r.terms.emplace(m, F(s * c));
    return r;
}

// lets GMP expression templates multiply forms directly
template <class S, class F>
    requires(!std::same_as<S, F> && std::constructible_from<F, const S&>)
KForm<F> operator*(const S& s, const KForm<F>& a) {
    return F(s) * a;
}

template <class F>
KForm<F> wedge(const KForm<F>& a, const KForm<F>& b) {
    if (a.dim != b.dim) throw std::invalid_argument("wedge: dimension mismatch");
    if (a.degree + b.degree > MAX_DIM + 1)
        return KForm<F>(a.dim, std::min(a.dim + 1, MAX_DIM + 1));
    KForm<F> r(a.dim, a.degree + b.degree);
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            if (ma & mb) continue;
            F c = ca * cb;
            if (wedge_sign(ma, mb) < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    return r;
}

// Interior product with a degree-1 vector.
template <class F>
KForm<F> contract(const KVector<F>& v, const KForm<F>& a) {
    if (v.dim != a.dim) throw std::invalid_argument("contract: dimension mismatch");
    if (v.degree != 1) throw std::invalid_argument("contract: direction must have degree 1");
    if (a.degree < 1) throw std::invalid_argument("contract: form degree < 1");
    KForm<F> r(a.dim, a.degree - 1);
    for (auto& [mv, cv] : v.terms) {
        int i = mask_indices(mv)[0];
        for (auto& [ma, ca] : a.terms) {
            if (!(ma & mv)) continue;
            F c = cv * ca;
            if (contract_sign(ma, i) < 0) c = -c;
            r.add_term(ma & ~mv, c);
        }
    }
    return r;
}

template <class F>
KForm<F> contract_basis(int i, const KForm<F>& a) {
    KVector<F> v(a.dim, 1);
    v.add_term(1u << (i - 1), F(1));
    return contract(v, a);
}

template <class F>
KForm<F> pullback(const LinearMap<F>& m, const KForm<F>& a) {
    if (m.src() != a.dim) throw std::invalid_argument("pullback: dimension mismatch");
    int n = m.dst();
    KForm<F> r(n, a.degree);
    for (auto& [ma, ca] : a.terms) {
        KForm<F> prod(n, 0);
        prod.add_term(0, ca);
        for (int j : mask_indices(ma)) {
            KForm<F> img(n, 1);
            for (int i = 0; i < n; ++i)
                if (!is_zero(m.rows[j - 1][i])) img.add_term(1u << i, m.rows[j - 1][i]);
            prod = wedge(prod, img);
            if (prod.is_zero_form()) break;
        }
        for (auto& [mm, cc] : prod.terms) r.add_term(mm, cc);
    }
    return r;
}

// pullback(compose(m1, m2), a) == pullback(m2, pullback(m1, a))
template <class F>
LinearMap<F> compose(const LinearMap<F>& m1, const LinearMap<F>& m2) {
    return LinearMap<F>{mat_mul(m1.rows, m2.rows)};
}

// Matrix of v |-> v ⌟ a, rows indexed by (degree-1)-subsets in mask order.
template <class F>
Mat<F> contraction_matrix(const KForm<F>& a) {
    std::map<Mask, int> row_of;
    Mat<F> m;
    std::vector<Vec<F>> cols;
    Mat<F> result;
    int n = a.dim;
    std::vector<KForm<F>> col_forms;
    for (int i = 1; i <= n; ++i) col_forms.push_back(contract_basis(i, a));
    for (auto& f : col_forms)
        for (auto& [mm, cc] : f.terms)
            if (!row_of.count(mm)) {
                int idx = (int)row_of.size();
                row_of[mm] = idx;
            }
    result = mat_zero<F>((int)row_of.size(), n);
    for (int i = 0; i < n; ++i)
        for (auto& [mm, cc] : col_forms[i].terms) result[row_of[mm]][i] = cc;
    return result;
}

template <class F>
int rank_of_form(const KForm<F>& a) {
    if (a.is_zero_form()) return 0;
    return mat_rank(contraction_matrix(a));
}

template <class F>
bool is_decomposable(const KForm<F>& a) {
    if (a.is_zero_form()) throw std::invalid_argument("is_decomposable: zero form");
    return rank_of_form(a) == a.degree;
}

template <class F>
int two_form_length(const KForm<F>& w) {
    if (w.degree != 2) throw std::invalid_argument("two_form_length: degree must be 2");
    if (w.is_zero_form()) return 0;
    KForm<F> p = w;
    int l = 1;
    while (2 * (l + 1) <= w.dim) {
        p = wedge(p, w);
        if (p.is_zero_form()) break;
        ++l;
    }
    return l;
}

// Component whose monomials draw exactly signature[b] indices from block b.
template <class F>
KForm<F> graded_project(const KForm<F>& a, const std::vector<Mask>& blocks,
                        const std::vector<int>& sig) {
    if (blocks.size() != sig.size()) throw std::invalid_argument("graded_project: shape mismatch");
    int total = 0;
    for (int s : sig) total += s;
    if (total != a.degree) throw std::invalid_argument("graded_project: signature sum != degree");
    KForm<F> r(a.dim, a.degree);
    for (auto& [m, c] : a.terms) {
        bool keep = true;
        for (size_t b = 0; b < blocks.size(); ++b)
            if (mask_card(m & blocks[b]) != sig[b]) {
                keep = false;
                break;
            }
        if (keep) r.terms.emplace(m, c);
    }
    return r;
}

// Lift a rational form into a larger coefficient field.
template <class F>
KForm<F> lift(const KForm<Rat>& a) {
    KForm<F> r(a.dim, a.degree);
    for (auto& [m, c] : a.terms) r.terms.emplace(m, F(c));
    return r;
}

// Reindex a form: index i of the source becomes dest[i-1] in a space of
// dimension new_dim (dest entries distinct, 1-based).
template <class F>
KForm<F> relabel(const KForm<F>& a, const std::vector<int>& dest, int new_dim) {
    KForm<F> r(new_dim, a.degree);
    for (auto& [m, c] : a.terms) {
        Mask nm = 0;
        int swaps = 0;
        std::vector<int> imgs;
        for (int i : mask_indices(m)) imgs.push_back(dest[i - 1]);
        // count inversions produced by the relabeling
        for (size_t x = 0; x < imgs.size(); ++x)
            for (size_t y = x + 1; y < imgs.size(); ++y)
                if (imgs[x] > imgs[y]) ++swaps;
        for (int i : imgs) nm |= 1u << (i - 1);
        r.add_term(nm, (swaps % 2) ? -c : c);
    }
    return r;
}

template <class F>
KForm<F> one_form(int n, const Vec<F>& coeffs) {
    KForm<F> f(n, 1);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!is_zero(coeffs[i])) f.add_term(1u << i, coeffs[i]);
    return f;
}

using QForm = KForm<Rat>;
using QVector = KVector<Rat>;
using QMap = LinearMap<Rat>;

}  // namespace cocal
