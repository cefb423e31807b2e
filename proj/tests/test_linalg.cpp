#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocal/linalg.hpp"

using namespace cocal;

TEST_CASE("rref, rank, kernel, solve, inverse, det") {
    Mat<Rat> m = {{rat(1), rat(2), rat(3)}, {rat(2), rat(4), rat(6)}, {rat(1), rat(0), rat(1)}};
    CHECK(mat_rank(m) == 2);
    Mat<Rat> ker = kernel_basis(m, 3);
    CHECK(ker.size() == 1);
    for (auto& row : m) {
        Rat s(0);
        for (int i = 0; i < 3; ++i) s += row[i] * ker[0][i];
        CHECK(sgn(s) == 0);
    }
    Mat<Rat> a = {{rat(2), rat(1)}, {rat(1), rat(1)}};
    auto inv = mat_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(a, *inv) == mat_identity<Rat>(2));
    CHECK(mat_det(a) == rat(1));
    auto sol = solve(a, Vec<Rat>{rat(3), rat(2)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == rat(1));
    CHECK((*sol)[1] == rat(1));
    CHECK_FALSE(solve(m, Vec<Rat>{rat(0), rat(1), rat(0)}).has_value());
}

TEST_CASE("signature by congruence") {
    Mat<Rat> s = {{rat(2), rat(0), rat(0)}, {rat(0), rat(-3), rat(0)}, {rat(0), rat(0), rat(0)}};
    Signature sig = signature(s);
    CHECK(sig.pos == 1);
    CHECK(sig.neg == 1);
    CHECK(sig.zero == 1);
    // off-diagonal pivot handling
    Mat<Rat> h = {{rat(0), rat(1)}, {rat(1), rat(0)}};
    sig = signature(h);
    CHECK(sig.pos == 1);
    CHECK(sig.neg == 1);
    Mat<Rat> d = {{rat(5), rat(2)}, {rat(2), rat(1)}};
    CHECK(signature(d).definite());
}

TEST_CASE("polynomial arithmetic") {
    Poly p = {rat(-1), rat(0), rat(1)};  // x^2 - 1
    Poly q = {rat(-1), rat(1)};          // x - 1
    auto [quo, rem] = poly_divmod(p, q);
    CHECK(rem.empty());
    CHECK(quo == Poly{rat(1), rat(1)});
    CHECK(poly_gcd(p, q) == poly_monic(q));
    auto roots = poly_rational_roots(p);
    CHECK(roots.size() == 2);
    Poly r = {rat(1, 2), rat(-3, 2), rat(1)};  // (x - 1/2)(x - 1)
    roots = poly_rational_roots(r);
    CHECK(roots.size() == 2);
    bool has_half = false;
    for (auto& x : roots) has_half |= (x == rat(1, 2));
    CHECK(has_half);
}

TEST_CASE("characteristic and minimal polynomials") {
    Mat<Rat> j = {{rat(2), rat(1), rat(0)}, {rat(0), rat(2), rat(0)}, {rat(0), rat(0), rat(3)}};
    Poly chi = char_poly(j);
    // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
    CHECK(chi == Poly{rat(-12), rat(16), rat(-7), rat(1)});
    Poly m = min_poly(j);
    CHECK(poly_deg(m) == 3);
    Mat<Rat> d = {{rat(2), rat(0), rat(0)}, {rat(0), rat(2), rat(0)}, {rat(0), rat(0), rat(3)}};
    CHECK(poly_deg(min_poly(d)) == 2);
    CHECK(sgn(poly_eval(min_poly(d), rat(2))) == 0);
    CHECK(sgn(poly_eval(min_poly(d), rat(3))) == 0);
}

TEST_CASE("rational square detection") {
    Rat root;
    CHECK(rat_is_square(rat(49, 16), &root));
    CHECK(root == rat(7, 4));
    CHECK_FALSE(rat_is_square(rat(2)));
    CHECK_FALSE(rat_is_square(rat(-4)));
    CHECK(rat_is_square(rat(0), &root));
}
