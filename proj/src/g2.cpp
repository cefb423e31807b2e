#include "cocal/g2.hpp"

#include <cmath>

namespace cocal {

std::string orbit_name(Orbit o) {
    switch (o) {
        case Orbit::G2: return "G2";
        case Orbit::G2star: return "G2*";
        case Orbit::Degenerate: return "degenerate";
    }
    return "?";
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    int n = (int)a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

namespace {

template <class F>
MetricResult metric_numeric_impl(const KForm<F>& phi) {
    if (classify_three_form(phi) != Orbit::G2)
        throw std::invalid_argument("metric_numeric: 3-form is not a G2-structure");
    KForm<F> vol = monomial<F>(7, (1u << 7) - 1);
    Mat<F> b = hitchin_bilinear(phi, vol);
    double det = to_double(mat_det(b));
    // B = 6 s g with vol_phi = s e^{1..7}, so det B = 6^7 s^9. The signed
    // ninth root keeps g positive definite for either orientation.
    double root9 = std::copysign(std::pow(std::abs(det), 1.0 / 9.0), det);
    double scale = std::pow(6.0, 2.0 / 9.0) * root9;
    MetricResult res;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) res.g[i][j] = to_double(b[i][j]) / scale;
    res.vol = root9 / std::pow(6.0, 7.0 / 9.0);
    return res;
}

}  // namespace

MetricResult metric_numeric(const QForm& phi) { return metric_numeric_impl(phi); }
MetricResult metric_numeric(const KForm<Quad>& phi) { return metric_numeric_impl(phi); }

double hitchin_margin(const KForm<Quad>& psi) {
    KVector<Quad> chi = dual_three_vector(psi);
    KForm<Quad> as_form(7, 3);
    as_form.terms = chi.terms;
    KForm<Quad> vol = monomial<Quad>(7, (1u << 7) - 1);
    Mat<Quad> b = hitchin_bilinear(as_form, vol);
    std::vector<std::vector<double>> bd(7, std::vector<double>(7));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) bd[i][j] = to_double(b[i][j]);
    auto ev = symmetric_eigenvalues(bd);
    double lo = 1e300, hi = 0;
    int pos = 0, neg = 0;
    for (double e : ev) {
        (e > 0 ? pos : neg)++;
        lo = std::min(lo, std::abs(e));
        hi = std::max(hi, std::abs(e));
    }
    if (pos != 7 && neg != 7) return 0.0;
    return hi == 0 ? 0.0 : lo / hi;
}

bool verify_certificate(const LieAlgebra& g, const Certificate& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (g.dim != 7 || cert.psi.dim != 7 || cert.psi.degree != 4)
        return fail("certificate shape mismatch");
    if (!ce_differential(g, cert.psi).is_zero_form()) return fail("d(psi) != 0");
    if (cert.kind == Evidence::Coframe) {
        if (cert.coframe.size() != 7) return fail("coframe evidence must have 7 one-forms");
        KForm<Quad> rebuilt;
        try {
            rebuilt = standard_four_form(cert.coframe);
        } catch (const std::exception& e) {
            return fail(std::string("bad coframe: ") + e.what());
        }
        if (!(rebuilt == cert.psi)) return fail("coframe does not reproduce psi");
        return true;
    }
    FourFormClass cls = classify_four_form(cert.psi);
    if (cls.orbit != Orbit::G2) return fail("psi is not in the G2 orbit");
    double m = hitchin_margin(cert.psi);
    if (m < kMarginThreshold)
        return fail("definiteness margin " + std::to_string(m) + " below threshold");
    return true;
}

}  // namespace cocal
