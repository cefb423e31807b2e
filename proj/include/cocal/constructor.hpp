#pragma once

#include "cocal/classifier.hpp"
#include "cocal/g2.hpp"
#include "cocal/subspace.hpp"

namespace cocal {

// Produce a verified certificate for a pair the classifier accepts.
// Throws std::logic_error if any internal construction step fails its
// exact checks (which would indicate a classifier/constructor mismatch).
Certificate construct(const AlgebraId& g4, const AlgebraId& g3);
Certificate construct(const AlgebraId& g4, const AlgebraId& g3, const Verdict& v);

// Constructive direction of the 5d + r2 criterion; the certificate lives
// on direct_sum(g5, r2) with d e^6 = e^{67}.
Certificate construct_5d_r2(const LieAlgebra& g5);

// The 7d algebra a (g5, r2) certificate refers to.
LieAlgebra five_r2_sum(const LieAlgebra& g5);

// Hodge-dual assembly on the coordinate splitting <e1..e4> + <e5..e7> of a
// 7d space: completes the definite family, forms psi = w1^2/2 + sum w_i nu_i
// and attaches adapted-coframe evidence. nus are 2-forms on a 3d space.
Certificate assemble_hodge_dual(const TwoFormFamily& fam, const std::vector<QForm>& nus3);

}  // namespace cocal
