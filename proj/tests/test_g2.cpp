#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocal/catalog.hpp"
#include "cocal/g2.hpp"

#include <random>

using namespace cocal;

namespace {

std::mt19937 rng(55441);

Rat rand_rat() {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    return rat(num(rng), den(rng));
}

QMap rand_invertible7() {
    while (true) {
        QMap m;
        m.rows = mat_zero<Rat>(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) m.rows[i][j] = rand_rat();
        if (sgn(mat_det(m.rows)) != 0) return m;
    }
}

std::vector<QForm> standard_coframe() {
    std::vector<QForm> c;
    for (int i = 1; i <= 7; ++i) c.push_back(monomial<Rat>(7, 1u << (i - 1)));
    return c;
}

std::vector<QForm> random_coframe() {
    QMap m = rand_invertible7();
    std::vector<QForm> c;
    for (int i = 0; i < 7; ++i) c.push_back(one_form(7, m.rows[i]));
    return c;
}

}  // namespace

TEST_CASE("standard three- and four-forms in the standard coframe") {
    QForm phi = standard_three_form(standard_coframe());
    CHECK(phi.coeff(mask_of({1, 2, 7})) == rat(1));
    CHECK(phi.coeff(mask_of({1, 4, 6})) == rat(-1));
    CHECK((int)phi.terms.size() == 7);
    QForm psi = standard_four_form(standard_coframe());
    CHECK(psi.coeff(mask_of({2, 4, 6, 7})) == rat(-1));
    CHECK(psi.coeff(mask_of({3, 4, 5, 6})) == rat(1));
    CHECK((int)psi.terms.size() == 7);
    // scaling every coframe entry by 2 scales the 3-form by 8
    std::vector<QForm> scaled;
    for (auto& f : standard_coframe()) scaled.push_back(rat(2) * f);
    CHECK(standard_three_form(scaled) == rat(8) * phi);
    // degenerate coframe rejected
    std::vector<QForm> bad = standard_coframe();
    bad[6] = bad[0];
    CHECK_THROWS(standard_three_form(bad));
}

TEST_CASE("hitchin bilinear form of the standard structure is 6 I") {
    // frozen from the wedge-expansion oracle: (e_i . phi)^(e_j . phi)^phi
    QForm phi = standard_three_form(standard_coframe());
    Mat<Rat> b = hitchin_bilinear(phi, monomial<Rat>(7, (1u << 7) - 1));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(b[i][j] == (i == j ? rat(kHitchinIdentityScale) : rat(0)));
    CHECK(hitchin_bilinear(QForm(7, 3), monomial<Rat>(7, (1u << 7) - 1)) == mat_zero<Rat>(7, 7));
}

TEST_CASE("hitchin transformation law under pullback") {
    QForm phi = standard_three_form(standard_coframe());
    QForm vol = monomial<Rat>(7, (1u << 7) - 1);
    for (int trial = 0; trial < 20; ++trial) {
        QMap m = rand_invertible7();
        Mat<Rat> b = hitchin_bilinear(pullback(m, phi), vol);
        // derived law: B(m* phi) = det(m) M^T (6 I) M with M = m.rows
        Mat<Rat> mT = mat_zero<Rat>(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) mT[i][j] = m.rows[j][i];
        Mat<Rat> expect = mat_mul(mT, m.rows);
        Rat det = mat_det(m.rows);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                CHECK(b[i][j] == rat(kHitchinIdentityScale) * det * expect[i][j]);
    }
}

TEST_CASE("three-form orbit classification") {
    QForm phi = standard_three_form(standard_coframe());
    CHECK(classify_three_form(phi) == Orbit::G2);
    CHECK(classify_three_form(monomial<Rat>(7, mask_of({1, 2, 3}))) == Orbit::Degenerate);
    // all-plus sign variant: the exact signature computation reports G2*
    QForm plus(7, 3);
    for (Mask m : {mask_of({1, 2, 7}), mask_of({3, 4, 7}), mask_of({5, 6, 7}), mask_of({1, 3, 5}),
                   mask_of({1, 4, 6}), mask_of({2, 3, 6}), mask_of({2, 4, 5})})
        plus.add_term(m, Rat(1));
    CHECK(classify_three_form(plus) == Orbit::G2star);
    // classification is a GL-orbit invariant: 100 random maps per class
    for (int trial = 0; trial < 100; ++trial) {
        QMap m = rand_invertible7();
        CHECK(classify_three_form(pullback(m, phi)) == Orbit::G2);
        CHECK(classify_three_form(pullback(m, plus)) == Orbit::G2star);
        CHECK(classify_three_form(pullback(m, monomial<Rat>(7, mask_of({1, 2, 3})))) ==
              Orbit::Degenerate);
    }
}

TEST_CASE("four-form orbit classification") {
    QForm psi = standard_four_form(standard_coframe());
    CHECK(classify_four_form(psi).orbit == Orbit::G2);
    CHECK(classify_four_form(monomial<Rat>(7, mask_of({1, 2, 3, 4}))).orbit == Orbit::Degenerate);
    QMap diag;
    diag.rows = mat_identity<Rat>(7);
    for (int i = 0; i < 4; ++i) diag.rows[i][i] = rat(3);
    CHECK(classify_four_form(pullback(diag, psi)).orbit == Orbit::G2);
    // orientation: both signs land in the G2 orbit, with the sign recorded
    auto plusc = classify_four_form(psi);
    auto minusc = classify_four_form(rat(-1) * psi);
    CHECK(plusc.orbit == Orbit::G2);
    CHECK(minusc.orbit == Orbit::G2);
    CHECK(plusc.sign == -minusc.sign);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(classify_four_form(standard_four_form(random_coframe())).orbit == Orbit::G2);
}

TEST_CASE("cocalibration check") {
    LieAlgebra r7(7, "R7");
    QForm psi = standard_four_form(standard_coframe());
    CHECK(is_cocalibrated(r7, psi));
    LieAlgebra g = direct_sum(instantiate(parse("A_{4,8}")), instantiate(parse("e(1,1)")));
    auto cof = table3_example(parse("A_{4,8}"), parse("e(1,1)"));
    REQUIRE(cof.has_value());
    KForm<Quad> psi2 = standard_four_form(*cof);
    CHECK(is_cocalibrated(g, psi2));
    // A_{4,1} + h3 admits no cocalibrated structure; the normal form is not closed
    LieAlgebra bad = direct_sum(instantiate(parse("A_{4,1}")), instantiate(parse("h3")));
    CHECK_FALSE(is_cocalibrated(bad, psi));
    CHECK_THROWS(is_cocalibrated(r7, monomial<Rat>(7, mask_of({1, 2, 3, 4}))));
}

TEST_CASE("numeric metric normalization") {
    QForm phi = standard_three_form(standard_coframe());
    MetricResult m = metric_numeric(phi);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(std::abs(m.g[i][j] - (i == j ? 1.0 : 0.0)) < 1e-12);
    CHECK(std::abs(m.vol - 1.0) < 1e-12);
    // homothety on an adapted basis: phi scales by 8, metric by 4
    std::vector<QForm> scaled;
    for (auto& f : standard_coframe()) scaled.push_back(rat(2) * f);
    MetricResult m2 = metric_numeric(standard_three_form(scaled));
    for (int i = 0; i < 7; ++i) CHECK(std::abs(m2.g[i][i] - 4.0) < 1e-9);
    CHECK_THROWS(metric_numeric(monomial<Rat>(7, mask_of({1, 2, 3}))));
}

TEST_CASE("coframe substitution agrees with pullback") {
    // swapping two coframe entries equals pulling back under the swap map
    std::vector<QForm> swapped = standard_coframe();
    std::swap(swapped[0], swapped[1]);
    QMap swapmap;
    swapmap.rows = mat_identity<Rat>(7);
    std::swap(swapmap.rows[0], swapmap.rows[1]);
    QForm phi = standard_three_form(standard_coframe());
    CHECK(standard_three_form(swapped) == pullback(swapmap, phi));
    CHECK(standard_four_form(swapped) ==
          pullback(swapmap, standard_four_form(standard_coframe())));
}

TEST_CASE("tabulated irrational coframe is orthonormal for its metric") {
    auto cof = table3_example(parse("A_{4,12}"), AlgebraId{"r3mu", {rat(1)}});
    REQUIRE(cof.has_value());
    KForm<Quad> phi = standard_three_form(*cof);
    MetricResult m = metric_numeric(phi);
    // coframe coefficient matrix and its inverse give the dual vectors
    Mat<Quad> rows = mat_zero<Quad>(7, 7);
    for (int i = 0; i < 7; ++i)
        for (auto& [mk, cc] : (*cof)[i].terms) rows[i][mask_indices(mk)[0] - 1] = cc;
    auto inv = mat_inverse(rows);
    REQUIRE(inv.has_value());
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            double gram = 0;
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    gram += to_double((*inv)[i][a]) * m.g[i][j] * to_double((*inv)[j][b]);
            CHECK(std::abs(gram - (a == b ? 1.0 : 0.0)) < 1e-9);
        }
}

TEST_CASE("metric gram matrix on random adapted coframes") {
    // for phi built from a coframe, the coframe's dual basis must come out
    // orthonormal for the numeric metric
    for (int trial = 0; trial < 10; ++trial) {
        QMap m = rand_invertible7();
        std::vector<QForm> cof;
        for (int i = 0; i < 7; ++i) cof.push_back(one_form(7, m.rows[i]));
        QForm phi = standard_three_form(cof);
        MetricResult mr = metric_numeric(phi);
        // adapted basis vectors: columns of the inverse coefficient matrix
        auto inv = mat_inverse(m.rows);
        REQUIRE(inv.has_value());
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b) {
                double gram = 0;
                for (int i = 0; i < 7; ++i)
                    for (int j = 0; j < 7; ++j)
                        gram += to_double((*inv)[i][a]) * mr.g[i][j] * to_double((*inv)[j][b]);
                CHECK(std::abs(gram - (a == b ? 1.0 : 0.0)) < 1e-9);
            }
    }
}

TEST_CASE("certificate verification") {
    LieAlgebra g = direct_sum(instantiate(parse("A_{4,8}")), instantiate(parse("e(1,1)")));
    auto cof = table3_example(parse("A_{4,8}"), parse("e(1,1)"));
    Certificate cert;
    cert.kind = Evidence::Coframe;
    cert.coframe = *cof;
    cert.psi = standard_four_form(*cof);
    CHECK(verify_certificate(g, cert));
    // a flipped coframe entry no longer reproduces psi
    Certificate broken = cert;
    broken.coframe[0] = Quad(-1) * broken.coframe[0];
    std::string why;
    CHECK_FALSE(verify_certificate(g, broken, &why));
    CHECK(why == "coframe does not reproduce psi");
    // closed but wrong algebra
    LieAlgebra other = direct_sum(instantiate(parse("A_{4,10}")), instantiate(parse("e(2)")));
    CHECK_FALSE(verify_certificate(other, cert, &why));
    // numeric evidence on the standard form over R^7
    LieAlgebra r7(7);
    Certificate num;
    num.kind = Evidence::Numeric;
    num.psi = lift<Quad>(standard_four_form(standard_coframe()));
    num.margin = hitchin_margin(num.psi);
    CHECK(num.margin == doctest::Approx(1.0));
    CHECK(verify_certificate(r7, num));
}
