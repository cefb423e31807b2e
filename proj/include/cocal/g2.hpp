#pragma once

#include "cocal/lie.hpp"
#include "cocal/multivector.hpp"

#include <array>
#include <string>
#include <vector>

namespace cocal {

enum class Orbit { G2, G2star, Degenerate };

std::string orbit_name(Orbit o);

// Seven-term normal forms in a given coframe (7 one-forms, must be independent).
template <class F>
KForm<F> standard_three_form(const std::vector<KForm<F>>& c);
template <class F>
KForm<F> standard_four_form(const std::vector<KForm<F>>& c);

// B[i][j] * ref_vol = (e_i . phi) ^ (e_j . phi) ^ phi
template <class F>
Mat<F> hitchin_bilinear(const KForm<F>& phi, const KForm<F>& ref_vol);

// On the standard phi the Hitchin matrix is this multiple of the identity
// (frozen from the wedge-expansion oracle in the test suite).
inline const long kHitchinIdentityScale = 6;

template <class F>
Orbit classify_three_form(const KForm<F>& phi);

// Dual 3-vector of a 4-form against the inverse of e^{1..7}.
template <class F>
KVector<F> dual_three_vector(const KForm<F>& psi);

struct FourFormClass {
    Orbit orbit;
    int sign;  // +1 when the Hitchin form of psi's dual 3-vector is positive, -1 when negative
};

template <class F>
FourFormClass classify_four_form(const KForm<F>& psi);

template <class F>
bool is_cocalibrated(const LieAlgebra& g, const KForm<F>& psi);

struct MetricResult {
    std::array<std::array<double, 7>, 7> g;
    double vol;  // coefficient of e^{1..7} in the metric volume form
};

// Floating-point metric normalized so adapted bases come out orthonormal.
MetricResult metric_numeric(const QForm& phi);
MetricResult metric_numeric(const KForm<Quad>& phi);

// Relative definiteness margin |lambda|_min / |lambda|_max of the Hitchin
// matrix of psi's dual 3-vector, in double precision. 0 when not definite.
double hitchin_margin(const KForm<Quad>& psi);

inline const double kMarginThreshold = 1e-6;
inline const double kNumericPrecision = 1e-12;

enum class Evidence { Coframe, Numeric };

struct Certificate {
    KForm<Quad> psi;                   // closed 4-form, exact coefficients
    Evidence kind = Evidence::Numeric;
    std::vector<KForm<Quad>> coframe;  // 7 one-forms when kind == Coframe
    double margin = 0.0;               // declared margin when kind == Numeric
    std::string route;
    std::string algebra;
};

bool verify_certificate(const LieAlgebra& g, const Certificate& cert, std::string* why = nullptr);

// Symmetric eigenvalues by cyclic Jacobi rotations (used for numeric margins).
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

// --- template implementations ----------------------------------------------

namespace detail {
struct SignedMask {
    Mask m;
    int sign;
};
inline const std::array<SignedMask, 7> kPhiTerms = {{{mask_of({1, 2, 7}), 1},
                                                     {mask_of({3, 4, 7}), 1},
                                                     {mask_of({5, 6, 7}), 1},
                                                     {mask_of({1, 3, 5}), 1},
                                                     {mask_of({1, 4, 6}), -1},
                                                     {mask_of({2, 3, 6}), -1},
                                                     {mask_of({2, 4, 5}), -1}}};
inline const std::array<SignedMask, 7> kPsiTerms = {{{mask_of({1, 2, 3, 4}), 1},
                                                     {mask_of({1, 2, 5, 6}), 1},
                                                     {mask_of({3, 4, 5, 6}), 1},
                                                     {mask_of({2, 4, 6, 7}), -1},
                                                     {mask_of({2, 3, 5, 7}), 1},
                                                     {mask_of({1, 4, 5, 7}), 1},
                                                     {mask_of({1, 3, 6, 7}), 1}}};

template <class F>
void check_coframe(const std::vector<KForm<F>>& c) {
    if (c.size() != 7) throw std::invalid_argument("coframe must have 7 entries");
    Mat<F> m = mat_zero<F>(7, 7);
    for (int i = 0; i < 7; ++i) {
        if (c[i].dim != 7 || c[i].degree != 1)
            throw std::invalid_argument("coframe entries must be 1-forms in dimension 7");
        for (auto& [mm, cc] : c[i].terms) m[i][mask_indices(mm)[0] - 1] = cc;
    }
    if (mat_rank(m) != 7) throw std::invalid_argument("coframe is linearly dependent");
}

template <class F>
KForm<F> from_terms(const std::vector<KForm<F>>& c, const std::array<SignedMask, 7>& terms) {
    check_coframe(c);
    KForm<F> r(7, mask_card(terms[0].m));
    for (auto& t : terms) {
        KForm<F> prod(7, 0);
        prod.add_term(0, F(t.sign));
        for (int i : mask_indices(t.m)) prod = wedge(prod, c[i - 1]);
        r = r + prod;
    }
    return r;
}
}  // namespace detail

template <class F>
KForm<F> standard_three_form(const std::vector<KForm<F>>& c) {
    return detail::from_terms(c, detail::kPhiTerms);
}

template <class F>
KForm<F> standard_four_form(const std::vector<KForm<F>>& c) {
    return detail::from_terms(c, detail::kPsiTerms);
}

template <class F>
Mat<F> hitchin_bilinear(const KForm<F>& phi, const KForm<F>& ref_vol) {
    if (phi.dim != 7 || phi.degree != 3) throw std::invalid_argument("hitchin: need a 3-form in dim 7");
    if (ref_vol.degree != 7 || ref_vol.is_zero_form())
        throw std::invalid_argument("hitchin: reference volume must be a nonzero 7-form");
    F r = ref_vol.coeff((1u << 7) - 1);
    std::vector<KForm<F>> ctr;
    for (int i = 1; i <= 7; ++i) ctr.push_back(contract_basis(i, phi));
    Mat<F> b = mat_zero<F>(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            F v = wedge(wedge(ctr[i], ctr[j]), phi).coeff((1u << 7) - 1) / r;
            b[i][j] = v;
            b[j][i] = v;
        }
    return b;
}

template <class F>
Orbit classify_three_form(const KForm<F>& phi) {
    KForm<F> vol = monomial<F>(7, (1u << 7) - 1);
    Mat<F> b = hitchin_bilinear(phi, vol);
    if (is_zero(mat_det(b))) return Orbit::Degenerate;
    Signature s = signature(b);
    if (s.definite()) return Orbit::G2;
    if ((s.pos == 4 && s.neg == 3) || (s.pos == 3 && s.neg == 4)) return Orbit::G2star;
    throw std::logic_error("classify_three_form: impossible Hitchin signature");
}

template <class F>
KVector<F> dual_three_vector(const KForm<F>& psi) {
    if (psi.dim != 7 || psi.degree != 4)
        throw std::invalid_argument("dual_three_vector: need a 4-form in dim 7");
    KVector<F> chi(7, 3);
    Mask full = (1u << 7) - 1;
    for (auto& [m, c] : psi.terms) {
        Mask t = full & ~m;
        F v = c;
        if (wedge_sign(t, m) < 0) v = -v;
        chi.add_term(t, v);
    }
    return chi;
}

template <class F>
FourFormClass classify_four_form(const KForm<F>& psi) {
    KVector<F> chi = dual_three_vector(psi);
    // run the 3-form machinery on the dual-space coefficients
    KForm<F> as_form(7, 3);
    as_form.terms = chi.terms;
    KForm<F> vol = monomial<F>(7, (1u << 7) - 1);
    Mat<F> b = hitchin_bilinear(as_form, vol);
    if (is_zero(mat_det(b))) return {Orbit::Degenerate, 0};
    Signature s = signature(b);
    if (s.definite()) return {Orbit::G2, s.pos == 7 ? 1 : -1};
    if ((s.pos == 4 && s.neg == 3) || (s.pos == 3 && s.neg == 4))
        return {Orbit::G2star, s.pos == 4 ? 1 : -1};
    throw std::logic_error("classify_four_form: impossible Hitchin signature");
}

template <class F>
bool is_cocalibrated(const LieAlgebra& g, const KForm<F>& psi) {
    if (classify_four_form(psi).orbit != Orbit::G2)
        throw std::invalid_argument("is_cocalibrated: 4-form is not in the G2 orbit");
    return ce_differential(g, psi).is_zero_form();
}

}  // namespace cocal
