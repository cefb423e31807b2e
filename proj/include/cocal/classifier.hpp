#pragma once

#include "cocal/catalog.hpp"
#include "cocal/lie.hpp"

#include <optional>
#include <string>

namespace cocal {

enum class Obstruction {
    None,
    Prop33CohomologyBound,   // h1(g4)+h1(u)-h2(g4)+h2(g3) > 4
    Prop34aAlmostAbelian,    // almost Abelian g4 with non-unimodular g3 != r2+R
    Prop34b5d,               // g5 + r2 with non-unimodular g5
    Lemma34Orbit,            // A48/A410 + e(2)/e(1,1) length analysis
    Lemma35A41h3,            // A_{4,1} + h3
    Lemma38Det,              // h3 kernel, g3 = r2+R, det(F + trF) != 0
    Lemma310Discriminant,    // the A_{4,9} scalar-case discriminant failures
    Thm37LengthOne,          // 5d + r2 exceptional adjoint shapes
    FAlmostAbelian7d,        // A_{4,1} + R^3, by the almost-Abelian classification
};

enum class Route {
    None,
    SymplecticSubspace,
    Contact,
    H3Ideal,
    FiveR2,
    H3KernelDet0,
    H3KernelGeneric,
    H3KernelScalar,
    Table3,
    Eq3Direct,
};

std::string obstruction_tag(Obstruction o);
std::string route_tag(Route r);

struct BranchData {
    bool uni4 = false, uni3 = false;
    char branch = '?';          // 'a'..'d' of the main theorem, 'e' for 5d+r2
    std::string subclause;
    std::string kernel4;        // class of the unimodular kernel of g4, when defined
    CohomologyVector h4, h3;
    int comm4 = -1;
    std::optional<int> q;       // h1(g4)+h1(u)-h2(g4)+h2(g3)
};

struct Verdict {
    bool exists = false;
    Obstruction obstruction = Obstruction::None;
    Route route = Route::None;
    BranchData data;
};

Verdict decide(const AlgebraId& g4, const AlgebraId& g3);

// Five-dimensional surface: g5 almost Abelian, paired with r2.
Verdict decide_5d_r2(const LieAlgebra& g5);
Verdict decide_5d_r2(const AlgebraId& g5);

std::string explain(const AlgebraId& g4, const AlgebraId& g3, const Verdict& v);

}  // namespace cocal
