#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocal/constructor.hpp"

using namespace cocal;

namespace {

Certificate make(const std::string& pair, Route expect_route) {
    auto [a, b] = parse_pair(pair);
    Verdict v = decide(a, b);
    REQUIRE(v.exists);
    REQUIRE(v.route == expect_route);
    Certificate cert = construct(a, b, v);
    LieAlgebra g = direct_sum(instantiate(a), instantiate(b));
    std::string why;
    bool ok = verify_certificate(g, cert, &why);
    INFO(pair, ": ", why);
    CHECK(ok);
    CHECK(ce_differential(g, cert.psi).is_zero_form());
    CHECK(classify_four_form(cert.psi).orbit == Orbit::G2);
    return cert;
}

}  // namespace

TEST_CASE("route dispatch on representative pairs") {
    CHECK(make("R4+R3", Route::Eq3Direct).kind == Evidence::Coframe);
    CHECK(make("A_{4,8}+e(1,1)", Route::Table3).kind == Evidence::Coframe);
    CHECK(make("A_{4,12}+r3mu^1", Route::Table3).kind == Evidence::Coframe);
    CHECK(make("r2r2+r3mu^1", Route::Table3).kind == Evidence::Coframe);
    make("A_{4,1}+e(2)", Route::SymplecticSubspace);
    make("A_{4,1}+e(1,1)", Route::SymplecticSubspace);
    make("e(2)+R+h3", Route::SymplecticSubspace);
    make("h3+R+e(1,1)", Route::SymplecticSubspace);
    make("A_{4,12}+so(3)", Route::SymplecticSubspace);   // swapped orientation
    make("A_{4,8}+so(2,1)", Route::SymplecticSubspace);  // non-solvable g3, D = 0
    make("A_{4,3}+e(2)", Route::SymplecticSubspace);
    make("r2r2+e(2)", Route::Contact);
    make("A_{4,12}+r3", Route::Contact);
    make("r2r2+r3'mu^{3}", Route::Contact);
    make("A_{4,8}+r2+R", Route::H3Ideal);
    make("A_{4,10}+r3mu^{-1/2}", Route::H3Ideal);
    make("A_{4,1}+r2+R", Route::FiveR2);
    make("e(1,1)+R+r2+R", Route::FiveR2);
    make("A_{4,9}^{-1/2}+r2+R", Route::H3KernelDet0);
    make("A_{4,7}+r3", Route::H3KernelGeneric);
    make("A_{4,11}^{2}+r3'mu^{1/2}", Route::H3KernelGeneric);
    make("A_{4,9}^1+r3mu^{1/2}", Route::H3KernelScalar);
    make("A_{4,9}^{1/3}+r3mu^1", Route::H3KernelScalar);
}

TEST_CASE("exact routes deliver adapted coframes") {
    Certificate c = make("A_{4,9}^{-1/2}+r2+R", Route::H3KernelDet0);
    CHECK(c.kind == Evidence::Coframe);
    c = make("A_{4,1}+r2+R", Route::FiveR2);
    CHECK(c.kind == Evidence::Coframe);
    c = make("A_{4,7}+r3mu^{-1/2}", Route::H3KernelGeneric);
    CHECK(c.kind == Evidence::Coframe);
}

TEST_CASE("rescaled routes deliver numeric evidence above the margin") {
    for (const char* pair : {"A_{4,1}+e(2)", "A_{4,12}+r3", "A_{4,8}+r2+R"}) {
        auto [a, b] = parse_pair(pair);
        Certificate c = construct(a, b);
        CHECK(c.kind == Evidence::Numeric);
        CHECK(c.margin >= kMarginThreshold);
    }
}

TEST_CASE("construct refuses NotExists verdicts") {
    auto [a, b] = parse_pair("A_{4,1}+h3");
    CHECK_THROWS_AS(construct(a, b), std::invalid_argument);
}

TEST_CASE("five_r2 constructions from raw 5d data") {
    // adjoint diag(1,-1,0,0)
    LieAlgebra g5(5, "diag(1,-1,0,0)");
    g5.d1[0].add_term(mask_of({1, 5}), rat(1));
    g5.d1[1].add_term(mask_of({2, 5}), rat(-1));
    Certificate c = construct_5d_r2(g5);
    LieAlgebra g = five_r2_sum(g5);
    CHECK(verify_certificate(g, c));
    // A_{4,5}^{-1/2,-1/2} + R as the 5d factor
    LieAlgebra b = direct_sum(instantiate(parse("A_{4,5}^{-1/2,-1/2}")), LieAlgebra(1));
    Certificate c2 = construct_5d_r2(b);
    CHECK(verify_certificate(five_r2_sum(b), c2));
    // R5 has no certificate
    CHECK_THROWS(construct_5d_r2(instantiate(parse("R5"))));
}

TEST_CASE("hodge dual assembly from two-form data") {
    auto e4f = [](std::initializer_list<int> idx, long n = 1) {
        QForm f(4, 2);
        f.add_term(mask_of(idx), rat(n));
        return f;
    };
    auto e3f = [](std::initializer_list<int> idx, long n = 1) {
        QForm f(3, 2);
        f.add_term(mask_of(idx), rat(n));
        return f;
    };
    QForm wt1 = e4f({1, 2}) + e4f({3, 4});
    QForm wt2 = e4f({1, 3}) - e4f({2, 4});
    QForm wt3 = e4f({1, 4}) + e4f({2, 3});
    // nu = (e^{56}, e^{67}, e^{57}) in local 3d coordinates
    std::vector<QForm> nus = {e3f({1, 2}), e3f({2, 3}), e3f({1, 3})};
    LieAlgebra flat(7);
    // the standard triple assembles to the standard four-form
    Certificate c = assemble_hodge_dual(standard_family({wt1, wt2, wt3}), nus);
    std::vector<KForm<Quad>> std_cof;
    for (int i = 1; i <= 7; ++i) std_cof.push_back(monomial<Quad>(7, 1u << (i - 1)));
    CHECK(c.psi == standard_four_form(std_cof));
    CHECK(verify_certificate(flat, c));
    // scaling all members by 4 scales the Gram by 16 and stays valid
    Certificate c4 = assemble_hodge_dual(
        standard_family({rat(4) * wt1, rat(4) * wt2, rat(4) * wt3}), nus);
    CHECK(verify_certificate(flat, c4));
    // k = 0: a triple is chosen automatically, with coframe evidence
    Certificate c0 = assemble_hodge_dual(standard_family({}), nus);
    CHECK(c0.kind == Evidence::Coframe);
    CHECK(verify_certificate(flat, c0));
    // k = 1 and k = 2
    CHECK(verify_certificate(flat, assemble_hodge_dual(standard_family({wt1}), nus)));
    CHECK(verify_certificate(
        flat, assemble_hodge_dual(standard_family({wt1, rat(2) * wt2 + wt3}), nus)));
    // indefinite families are rejected
    CHECK_THROWS(assemble_hodge_dual(standard_family({e4f({1, 2})}), nus));
    // dependent nus are rejected
    CHECK_THROWS(assemble_hodge_dual(standard_family({wt1}),
                                     std::vector<QForm>{e3f({1, 2}), e3f({1, 2}), e3f({1, 3})}));
}

TEST_CASE("certificates are tamper-evident") {
    auto [a, b] = parse_pair("A_{4,8}+e(1,1)");
    Certificate cert = construct(a, b);
    LieAlgebra g = direct_sum(instantiate(a), instantiate(b));
    Certificate broken = cert;
    // flip one coefficient of psi: either no longer closed or not a pullback
    broken.psi.add_term(mask_of({1, 2, 3, 4}), Quad(1));
    CHECK_FALSE(verify_certificate(g, broken));
    // swap the algebra
    LieAlgebra other = direct_sum(instantiate(parse("A_{4,10}")), instantiate(parse("e(2)")));
    CHECK_FALSE(verify_certificate(other, cert));
}
