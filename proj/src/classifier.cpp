#include "cocal/classifier.hpp"

#include "cocal/subspace.hpp"

#include <sstream>

namespace cocal {

std::string obstruction_tag(Obstruction o) {
    switch (o) {
        case Obstruction::None: return "none";
        case Obstruction::Prop33CohomologyBound: return "Prop3.3-cohomology-bound";
        case Obstruction::Prop34aAlmostAbelian: return "Prop3.4a-almost-abelian";
        case Obstruction::Prop34b5d: return "Prop3.4b-5d";
        case Obstruction::Lemma34Orbit: return "Lemma3.4-orbit";
        case Obstruction::Lemma35A41h3: return "Lemma3.5-A41h3";
        case Obstruction::Lemma38Det: return "Lemma3.8-det";
        case Obstruction::Lemma310Discriminant: return "Lemma3.10-discriminant";
        case Obstruction::Thm37LengthOne: return "Thm3.7-length-one";
        case Obstruction::FAlmostAbelian7d: return "F-almost-abelian-7d";
    }
    return "?";
}

std::string route_tag(Route r) {
    switch (r) {
        case Route::None: return "none";
        case Route::SymplecticSubspace: return "symplectic-subspace";
        case Route::Contact: return "contact";
        case Route::H3Ideal: return "h3-ideal";
        case Route::FiveR2: return "five-r2";
        case Route::H3KernelDet0: return "h3-kernel-det0";
        case Route::H3KernelGeneric: return "h3-kernel-generic";
        case Route::H3KernelScalar: return "h3-kernel-scalar";
        case Route::Table3: return "table3";
        case Route::Eq3Direct: return "eq3-direct";
    }
    return "?";
}

namespace {

bool is_h_plus_R(const std::string& f) {
    return f == "so(3)R" || f == "so(2,1)R" || f == "e(2)R" || f == "e(1,1)R" || f == "h3R" ||
           f == "R4";
}

bool is_r31(const AlgebraId& id) {
    return id.family == "r3mu" && id.params.size() == 1 && id.params[0] == 1;
}

}  // namespace

Verdict decide(const AlgebraId& id4, const AlgebraId& id3) {
    validate(id4);
    validate(id3);
    if (family_dim(id4.family) == 5) {
        if (id3.family != "r2") throw std::invalid_argument("5d factor must be paired with r2");
        return decide_5d_r2(id4);
    }
    if (family_dim(id4.family) != 4 || family_dim(id3.family) != 3)
        throw std::invalid_argument("decide: need a 4d and a 3d algebra");

    LieAlgebra g4 = instantiate(id4), g3 = instantiate(id3);
    Verdict v;
    BranchData& bd = v.data;
    bd.uni4 = is_unimodular(g4);
    bd.uni3 = is_unimodular(g3);
    bd.h4 = cohomology(g4);
    bd.h3 = cohomology(g3);
    bd.comm4 = commutator_dim(g4);
    if (!bd.uni4) {
        KernelResult k = unimodular_kernel(g4);
        bd.kernel4 = bianchi_name(classify_3d(k.algebra));
        bd.q = bd.h4.h[0] + cohomology(k.algebra).h[0] - bd.h4.h[1] + bd.h3.h[1];
    }
    auto exists = [&](Route r, const std::string& sub) {
        v.exists = true;
        v.route = r;
        bd.subclause = sub;
        return v;
    };
    auto not_exists = [&](Obstruction o, const std::string& sub) {
        v.exists = false;
        v.obstruction = o;
        bd.subclause = sub;
        return v;
    };

    if (!bd.uni4 && bd.uni3) {
        bd.branch = 'a';
        if (*bd.q <= 4)
            return exists(id4.family == "r2r2" ? Route::Contact : Route::SymplecticSubspace,
                          "h1(g4)+h1(u)-h2(g4)+h2(g3) <= 4");
        return not_exists(Obstruction::Prop33CohomologyBound, "h1(g4)+h1(u)-h2(g4)+h2(g3) > 4");
    }

    if (bd.uni4 && bd.uni3) {
        bd.branch = 'b';
        if (id3.family == "so(3)" || id3.family == "so(2,1)")
            return exists(Route::SymplecticSubspace, "(b)(a) g3 in {so(3), so(2,1)}");
        if (is_h_plus_R(id4.family)) {
            if (id4.family == "R4" && id3.family == "R3")
                return exists(Route::Eq3Direct, "(b)(b) abelian");
            return exists(Route::SymplecticSubspace, "(b)(b) g4 = h + R");
        }
        bool a41 = id4.family == "A_{4,1}";
        if (a41 && (id3.family == "e(2)" || id3.family == "e(1,1)"))
            return exists(Route::SymplecticSubspace, "(b)(c) A_{4,1} exceptional");
        if (id4.family == "A_{4,8}" && id3.family == "e(1,1)")
            return exists(Route::Table3, "(b)(c) A_{4,8}+e(1,1)");
        if (a41 && id3.family == "h3")
            return not_exists(Obstruction::Lemma35A41h3, "A_{4,1}+h3 excluded");
        if (a41 && id3.family == "R3")
            return not_exists(Obstruction::FAlmostAbelian7d,
                              "A_{4,1}+R3 excluded by the almost-Abelian classification");
        bool orbit48 = (id4.family == "A_{4,8}" && id3.family == "e(2)") ||
                       (id4.family == "A_{4,10}" &&
                        (id3.family == "e(2)" || id3.family == "e(1,1)"));
        if (orbit48) return not_exists(Obstruction::Lemma34Orbit, "length-two analysis fails");
        // dim [g4,g4] = 3 here, so the commutator is the unique unimodular
        // codimension-one ideal and the cohomology bound applies
        LieAlgebra u = subalgebra(g4, commutator_basis(g4));
        bd.kernel4 = bianchi_name(classify_3d(u));
        bd.q = bd.h4.h[0] + cohomology(u).h[0] - bd.h4.h[1] + bd.h3.h[1];
        return not_exists(Obstruction::Prop33CohomologyBound,
                          "h1(g4)+h1(u)-h2(g4)+h2(g3) > 4 with the unique unimodular ideal");
    }

    if (bd.uni4 && !bd.uni3) {
        bd.branch = 'c';
        if (is_almost_abelian(g4)) {
            if (id3.family != "r2R")
                return not_exists(Obstruction::Prop34aAlmostAbelian,
                                  "(c) almost Abelian g4 forces g3 = r2+R");
            if (id4.family == "R4" || id4.family == "h3R")
                return not_exists(Obstruction::Thm37LengthOne, "g4+R in {R5, h3+R2}");
            return exists(Route::FiveR2, "(c)(a) almost Abelian, g3 = r2+R");
        }
        if (id4.family == "A_{4,8}" || id4.family == "A_{4,10}")
            return exists(Route::H3Ideal, "(c)(b) [g4,g4] = h3");
        return exists(Route::SymplecticSubspace, "(c)(b) [g4,g4] in {so(3), so(2,1)}");
    }

    bd.branch = 'd';
    const std::string& ker = bd.kernel4;
    if (ker == "R3")
        return not_exists(Obstruction::Prop34aAlmostAbelian,
                          "(d) almost Abelian g4 with non-unimodular g3");
    if (ker == "e(2)" || ker == "e(1,1)") {
        if (is_r31(id3)) return exists(Route::Table3, "(d)(a) kernel e(2)/e(1,1), g3 = r3,1");
        return exists(Route::Contact, "(d)(a) kernel e(2)/e(1,1)");
    }
    // kernel h3
    bool f_scalar = (id4.family == "A_{4,9}" && id4.params[0] == 1);
    if (id3.family == "r2R") {
        if (id4.family == "A_{4,9}" && id4.params[0] == rat(-1, 2))
            return exists(Route::H3KernelDet0, "(d)(b) A_{4,9}^{-1/2}+r2+R");
        return not_exists(Obstruction::Lemma38Det, "det(F+trF id) != 0 with det G = 0");
    }
    bool excluded = false;
    if (id4.family == "A_{4,9}" && id3.family == "r3mu") {
        Rat alpha = id4.params[0], mu = id3.params[0];
        if (alpha == 1 && mu >= rat(-1, 3) && sgn(mu) < 0) excluded = true;
        if (mu == 1 && alpha > -1 && alpha <= rat(-1, 3)) excluded = true;
    }
    if (excluded)
        return not_exists(Obstruction::Lemma310Discriminant,
                          "(d)(c) excluded A_{4,9}/r3,mu family");
    if (f_scalar || is_r31(id3))
        return exists(Route::H3KernelScalar, "(d)(c) kernel h3, scalar F or G");
    return exists(Route::H3KernelGeneric, "(d)(c) kernel h3, generic F and G");
}

Verdict decide_5d_r2(const LieAlgebra& g5) {
    Verdict v;
    v.data.branch = 'e';
    auto ideal = abelian_codim1_ideal(g5);
    if (!ideal) throw std::invalid_argument("decide_5d_r2: g5 is not almost Abelian");
    if (!is_unimodular(g5)) {
        v.exists = false;
        v.obstruction = Obstruction::Prop34b5d;
        v.data.subclause = "g5 not unimodular";
        return v;
    }
    LengthTwoPair pair = length_two_pair_5d(g5, *ideal);
    if (pair.found) {
        v.exists = true;
        v.route = Route::FiveR2;
        v.data.subclause = "length-two pair found";
    } else {
        v.exists = false;
        v.obstruction = Obstruction::Thm37LengthOne;
        v.data.subclause = "adjoint shape in {0, h3+R2, A_{5,7}^{-1/3,-1/3,-1/3}}";
    }
    return v;
}

Verdict decide_5d_r2(const AlgebraId& g5) { return decide_5d_r2(instantiate(g5)); }

std::string explain(const AlgebraId& g4, const AlgebraId& g3, const Verdict& v) {
    std::ostringstream os;
    os << g4.str() << " + " << g3.str() << ": ";
    os << (v.exists ? "admits" : "does not admit") << " a cocalibrated G2-structure\n";
    os << "  branch (" << v.data.branch << "): g4 " << (v.data.uni4 ? "unimodular" : "not unimodular")
       << ", g3 " << (v.data.uni3 ? "unimodular" : "not unimodular") << "\n";
    if (!v.data.kernel4.empty()) os << "  unimodular kernel of g4: " << v.data.kernel4 << "\n";
    if (v.data.q) os << "  h1(g4)+h1(u)-h2(g4)+h2(g3) = " << *v.data.q << "\n";
    os << "  clause: " << v.data.subclause << "\n";
    if (v.exists)
        os << "  construction route: " << route_tag(v.route);
    else
        os << "  obstruction: " << obstruction_tag(v.obstruction);
    return os.str();
}

}  // namespace cocal
