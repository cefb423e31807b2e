// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, in code.
#include "cocal/serialization.hpp"
#include "cocal/sweep.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>

using namespace cocal;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    ~Criterion() {
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << dt << "s)";
        if (!ok) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

std::mt19937 rng(160920);

Rat rand_rat() {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    return rat(num(rng), den(rng));
}

Mat<Rat> random_invertible(int n) {
    while (true) {
        Mat<Rat> m = mat_zero<Rat>(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = rand_rat();
        if (sgn(mat_det(m)) != 0) return m;
    }
}

std::vector<QForm> standard_coframe() {
    std::vector<QForm> c;
    for (int i = 1; i <= 7; ++i) c.push_back(monomial<Rat>(7, 1u << (i - 1)));
    return c;
}

void criterion1_catalog_fidelity() {
    Criterion c("1. catalog fidelity: d^2 = 0 and tabulated cohomology, exact");
    int rows = 0;
    for (auto& fx : catalog_fixtures()) {
        LieAlgebra g = instantiate(fx.id);
        c.require(jacobi_check(g), fx.id.str() + ": d^2 != 0");
        c.require(cohomology(g).h == fx.h, fx.id.str() + ": cohomology mismatch");
        if (family_dim(fx.id.family) == 3 || family_dim(fx.id.family) == 4) ++rows;
    }
    c.require(rows >= 34, "fixture coverage too small");
}

void criterion2_last_column() {
    Criterion c("2. catalog column h1(g)+h1(u)-h2(g) for non-unimodular 4d rows");
    for (auto& fx : catalog_fixtures()) {
        if (fx.unimodular || family_dim(fx.id.family) != 4) continue;
        LieAlgebra g = instantiate(fx.id);
        KernelResult k = unimodular_kernel(g);
        int val = cohomology(g).h[0] + cohomology(k.algebra).h[0] - cohomology(g).h[1];
        c.require(fx.last_col.size() == 1 && val == fx.last_col[0],
                  fx.id.str() + ": last column mismatch");
    }
}

void criterion3_sweep() {
    Criterion c("3. classification sweep: certificates for every Exists verdict");
    SweepResult res = run_sweep(true, true);
    c.require((int)res.items.size() >= 200, "fewer than 200 pairs");
    c.require(res.cert_failures == 0, "certificate failures in the sweep");
    for (auto& item : res.items)
        c.require(item.error.empty(), item.g4.str() + "+" + item.g3.str() + ": " + item.error);
    // boundary pairs of clause (d)(c) land on the right side
    auto verdict_of = [&](const std::string& s) {
        auto [a, b] = parse_pair(s);
        return decide(a, b).exists;
    };
    c.require(!verdict_of("A_{4,9}^1+r3mu^{-1/3}"), "mu = -1/3 must be excluded");
    c.require(verdict_of("A_{4,9}^1+r3mu^{-1/2}"), "mu = -1/2 must be admitted");
    c.require(!verdict_of("A_{4,9}^{-1/3}+r3mu^1"), "alpha = -1/3 must be excluded");
    c.require(verdict_of("A_{4,9}^{-1/4}+r3mu^1"), "alpha = -1/4 must be admitted");
    // every branch is exercised
    bool a = false, b2 = false, c3 = false, d = false;
    for (auto& item : res.items) {
        Verdict v = decide(item.g4, item.g3);
        a |= v.data.branch == 'a';
        b2 |= v.data.branch == 'b';
        c3 |= v.data.branch == 'c';
        d |= v.data.branch == 'd';
    }
    c.require(a && b2 && c3 && d, "some branch of the theorem was not exercised");
}

void criterion4_table3() {
    Criterion c("4. tabulated adapted coframes give exactly closed normal-form pullbacks");
    AlgebraId r31{"r3mu", {rat(1)}};
    std::vector<std::pair<AlgebraId, AlgebraId>> rows = {
        {parse("A_{4,8}"), parse("e(1,1)")}, {parse("A_{4,12}"), r31}, {parse("r2r2"), r31}};
    for (auto& [a, b] : rows) {
        auto cof = table3_example(a, b);
        c.require(cof.has_value(), "missing tabulated coframe");
        if (!cof) continue;
        LieAlgebra g = direct_sum(instantiate(a), instantiate(b));
        KForm<Quad> psi = standard_four_form(*cof);
        c.require(ce_differential(g, psi).is_zero_form(),
                  a.str() + "+" + b.str() + ": pullback not closed");
    }
}

void criterion5_lemma214() {
    Criterion c("5. definite Gram <=> all sampled combinations have length two (500 families)");
    std::uniform_int_distribution<int> pick_k(1, 3), coin(0, 1);
    auto model = [&](int which) {
        QForm f(4, 2);
        if (which == 0) {
            f.add_term(mask_of({1, 2}), rat(1));
            f.add_term(mask_of({3, 4}), rat(1));
        } else if (which == 1) {
            f.add_term(mask_of({1, 3}), rat(1));
            f.add_term(mask_of({2, 4}), rat(-1));
        } else if (which == 2) {
            f.add_term(mask_of({1, 4}), rat(1));
            f.add_term(mask_of({2, 3}), rat(1));
        } else {
            f.add_term(mask_of({1, 2}), rat(1));  // decomposable: the null direction
        }
        return f;
    };
    int definite_count = 0, indefinite_count = 0;
    for (int trial = 0; trial < 500; ++trial) {
        LinearMap<Rat> lm{random_invertible(4)};
        int k = pick_k(rng);
        bool planted = coin(rng) == 1;
        std::vector<QForm> fam;
        if (planted) fam.push_back(pullback(lm, model(3)));
        for (int i = (int)fam.size(); i < k; ++i) fam.push_back(pullback(lm, model(i == 0 ? 0 : i)));
        TwoFormFamily f = standard_family(fam);
        Mat<Rat> h = gram(f);
        if (is_definite(h)) {
            ++definite_count;
            for (int s = 0; s < 50; ++s) {
                QForm combo(4, 2);
                bool nz = false;
                for (auto& w : fam) {
                    Rat r = rand_rat();
                    nz |= sgn(r) != 0;
                    combo = combo + r * w;
                }
                if (!nz) continue;
                c.require(two_form_length(combo) == 2, "definite family with a short combination");
            }
        } else {
            ++indefinite_count;
            // exhibit the exact null combination: the planted decomposable
            c.require(planted, "indefinite family without a planted null direction");
            if (planted) {
                Vec<Rat> av(k, Rat(0));
                av[0] = Rat(1);
                Rat q(0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) q += av[i] * h[i][j] * av[j];
                c.require(sgn(q) == 0, "planted direction is not H-null");
                c.require(two_form_length(fam[0]) <= 1, "planted direction has length two");
            }
        }
    }
    c.require(definite_count >= 100 && indefinite_count >= 100, "sample imbalance");
}

void criterion6_hitchin_normalization() {
    Criterion c("6. standard Hitchin matrix is 6 I; numeric metric is the identity");
    QForm phi = standard_three_form(standard_coframe());
    Mat<Rat> b = hitchin_bilinear(phi, monomial<Rat>(7, (1u << 7) - 1));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            c.require(b[i][j] == (i == j ? rat(6) : rat(0)), "Hitchin matrix is not 6 I");
    MetricResult m = metric_numeric(phi);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            c.require(std::abs(m.g[i][j] - (i == j ? 1.0 : 0.0)) <= 1e-9,
                      "numeric metric deviates from the identity beyond 1e-9");
    c.require(std::abs(m.vol - 1.0) <= 1e-9, "volume coefficient deviates from 1");
}

void criterion7_negative_fixtures() {
    Criterion c("7. negative fixtures return NotExists with the expected obstruction tags");
    auto check = [&](const std::string& pair, Obstruction tag) {
        auto [a, b] = parse_pair(pair);
        Verdict v = decide(a, b);
        c.require(!v.exists, pair + " should be NotExists");
        c.require(v.obstruction == tag,
                  pair + ": tag " + obstruction_tag(v.obstruction) + " != " + obstruction_tag(tag));
    };
    check("A_{4,10}+e(2)", Obstruction::Lemma34Orbit);
    check("A_{4,10}+e(1,1)", Obstruction::Lemma34Orbit);
    check("A_{4,8}+e(2)", Obstruction::Lemma34Orbit);
    check("A_{4,1}+h3", Obstruction::Lemma35A41h3);
    check("A_{4,1}+R3", Obstruction::FAlmostAbelian7d);
    check("h3+R+r2+R", Obstruction::Thm37LengthOne);
    check("R5+r2", Obstruction::Thm37LengthOne);
    check("A_{5,7}^{-1/3,-1/3,-1/3}+r2", Obstruction::Thm37LengthOne);
}

void criterion8_rank_fixtures() {
    Criterion c("8. rank(phi) = 7 and rank((v . psi)|_W) = 6 for 20 random (v, W)");
    QForm phi = standard_three_form(standard_coframe());
    QForm psi = standard_four_form(standard_coframe());
    c.require(rank_of_form(phi) == 7, "rank of the standard 3-form is not 7");
    std::uniform_int_distribution<int> nz(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        KVector<Rat> v(7, 1);
        Vec<Rat> vc(7, Rat(0));
        while (true) {
            bool any = false;
            for (int i = 0; i < 7; ++i) {
                vc[i] = rand_rat();
                any |= sgn(vc[i]) != 0;
            }
            if (any) break;
        }
        v.terms.clear();
        for (int i = 0; i < 7; ++i)
            if (sgn(vc[i]) != 0) v.add_term(1u << i, vc[i]);
        // random complement W of span{v}: rows of an invertible matrix whose
        // first row is v, remaining six span W
        Mat<Rat> basis;
        basis.push_back(vc);
        while ((int)basis.size() < 7) {
            Vec<Rat> w(7);
            for (auto& x : w) x = rand_rat();
            Mat<Rat> t = basis;
            t.push_back(w);
            if (mat_rank(t) == (int)t.size()) basis.push_back(w);
        }
        QForm rho = contract(v, psi);
        // restriction to W: substitute e^j by its values on the W basis
        LinearMap<Rat> incl;
        incl.rows = mat_zero<Rat>(7, 6);
        for (int j = 0; j < 7; ++j)
            for (int a = 0; a < 6; ++a) incl.rows[j][a] = basis[a + 1][j];
        KForm<Rat> rho_w = pullback(incl, rho);
        c.require(rank_of_form(rho_w) == 6, "restricted contraction rank is not 6");
    }
}

}  // namespace

int main() {
    criterion1_catalog_fidelity();
    criterion2_last_column();
    criterion3_sweep();
    criterion4_table3();
    criterion5_lemma214();
    criterion6_hitchin_normalization();
    criterion7_negative_fixtures();
    criterion8_rank_fixtures();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
