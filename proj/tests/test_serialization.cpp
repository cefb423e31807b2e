#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocal/constructor.hpp"
#include "cocal/serialization.hpp"

#include <random>

using namespace cocal;

namespace {
std::mt19937 rng(2468);
Rat rand_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return rat(num(rng), den(rng));
}
}  // namespace

TEST_CASE("coefficient strings round-trip") {
    for (int trial = 0; trial < 200; ++trial) {
        Quad q(rand_rat(), rand_rat(), rat(5));
        Quad back = quad_parse(quad_str(q));
        CHECK(back == q);
    }
    CHECK(quad_parse("3/4") == Quad(rat(3, 4)));
    CHECK(quad_parse("sqrt(10)") == Quad(Rat(0), Rat(1), rat(10)));
    CHECK(quad_parse("-sqrt(2)") == Quad(Rat(0), Rat(-1), rat(2)));
    CHECK(quad_parse("1/2+3*sqrt(5)") == Quad(rat(1, 2), rat(3), rat(5)));
    CHECK(quad_parse("-1/3-2/5*sqrt(5)") == Quad(rat(-1, 3), rat(-2, 5), rat(5)));
}

TEST_CASE("forms and algebras round-trip through JSON") {
    for (int trial = 0; trial < 50; ++trial) {
        QForm f(7, 3);
        for (Mask m : all_masks(7, 3))
            if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) f.add_term(m, rand_rat());
        CHECK(qform_from_json(qform_to_json(f)) == f);
    }
    LieAlgebra g = direct_sum(instantiate(parse("A_{4,9}^{-1/2}")), instantiate(parse("r2R")));
    LieAlgebra back = algebra_from_json(algebra_to_json(g));
    CHECK(back.dim == g.dim);
    for (int i = 0; i < 7; ++i) CHECK(back.d1[i] == g.d1[i]);
    CHECK(back.name == g.name);
}

TEST_CASE("certificates round-trip and re-verify") {
    for (const char* pair : {"A_{4,12}+r3mu^1", "A_{4,1}+e(2)", "A_{4,9}^{-1/2}+r2+R"}) {
        auto [a, b] = parse_pair(pair);
        Certificate cert = construct(a, b);
        LieAlgebra g = direct_sum(instantiate(a), instantiate(b));
        json j = certificate_to_json(cert, g);
        auto [back, gback] = certificate_from_json(json::parse(j.dump()));
        CHECK(back.kind == cert.kind);
        CHECK(back.psi == cert.psi);
        CHECK(verify_certificate(gback, back));
    }
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS(quad_parse("1//2"));
    CHECK_THROWS(quad_parse("sqrt("));
    CHECK_THROWS(algebra_from_json(json{{"dim", 3}, {"d", json::array()}}));
}
