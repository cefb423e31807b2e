#pragma once

#include "cocal/multivector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cocal {

// A Lie algebra in dual encoding: the Chevalley-Eilenberg differential of
// each basis 1-form. Brackets are derived on demand via
// de^k(e_i, e_j) = -e^k([e_i, e_j]).
struct LieAlgebra {
    int dim = 0;
    std::vector<QForm> d1;  // d of e^1..e^n, each a degree-2 form
    std::string name;

    LieAlgebra() = default;
    explicit LieAlgebra(int n, std::string nm = "") : dim(n), name(std::move(nm)) {
        d1.assign(n, QForm(n, 2));
    }
};

// [e_i, e_j] as a coefficient vector.
Vec<Rat> bracket_basis(const LieAlgebra& g, int i, int j);
Vec<Rat> bracket(const LieAlgebra& g, const Vec<Rat>& x, const Vec<Rat>& y);

template <class F>
KForm<F> ce_differential(const LieAlgebra& g, const KForm<F>& a) {
    if (a.dim != g.dim) throw std::invalid_argument("ce_differential: dimension mismatch");
    KForm<F> r(g.dim, std::min(a.degree + 1, MAX_DIM + 1));
    for (auto& [m, c] : a.terms) {
        auto idx = mask_indices(m);
        for (size_t t = 0; t < idx.size(); ++t) {
            Mask rest = m & ~(1u << (idx[t] - 1));
            // d(e^{i1..ik}) = sum_t (-1)^{t-1} e^{i1..}^ d(e^{it}) ^ {..ik};
            // the factor stays in place, so reorder d(e^{it}) past the prefix.
            Mask prefix = rest & ((1u << (idx[t] - 1)) - 1);
            Mask suffix = rest & ~prefix;
            F sign = (t % 2 == 0) ? F(1) : F(-1);
            for (auto& [dm, dc] : g.d1[idx[t] - 1].terms) {
                if (dm & rest) continue;
                int s = wedge_sign(prefix, dm) * wedge_sign(prefix | dm, suffix);
                F term = c * F(dc) * sign;
                if (s < 0) term = -term;
                r.add_term(prefix | dm | suffix, term);
            }
        }
    }
    return r;
}

bool jacobi_check(const LieAlgebra& g);
bool is_unimodular(const LieAlgebra& g);

// Coefficients of the trace functional x -> tr(ad_x); closed 1-form.
Vec<Rat> trace_functional(const LieAlgebra& g);

struct CohomologyVector {
    std::vector<int> h;  // h[k-1] = h^k, k = 1..n
    friend bool operator==(const CohomologyVector& a, const CohomologyVector& b) = default;
};

// Matrix of d on degree-k forms, rows = (k+1)-masks, cols = k-masks (mask order).
Mat<Rat> d_matrix(const LieAlgebra& g, int k);
CohomologyVector cohomology(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Structure of the span of the given rows as a subalgebra (throws if not closed).
LieAlgebra subalgebra(const LieAlgebra& g, const Mat<Rat>& rows, const std::string& name = "");

bool is_ideal(const LieAlgebra& g, const Mat<Rat>& rows);
bool is_abelian_subspace(const LieAlgebra& g, const Mat<Rat>& rows);

int commutator_dim(const LieAlgebra& g);
Mat<Rat> commutator_basis(const LieAlgebra& g);
Mat<Rat> center_basis(const LieAlgebra& g);
Mat<Rat> centralizer_basis(const LieAlgebra& g, const Mat<Rat>& rows);

struct KernelResult {
    Vec<Rat> xi;          // annihilating 1-form (the trace functional)
    Mat<Rat> basis;       // rows: kernel vectors in the ambient basis
    LieAlgebra algebra;   // induced structure on the kernel
};

// Unimodular kernel of a non-unimodular algebra (throws when unimodular).
KernelResult unimodular_kernel(const LieAlgebra& g);

// Codimension-one abelian ideal, if one exists (dim <= 5 supported).
std::optional<Mat<Rat>> abelian_codim1_ideal(const LieAlgebra& g);
bool is_almost_abelian(const LieAlgebra& g);

enum class Bianchi : int { R3, h3, e2, e11, so3, so21, r2R, r3, r3mu, r3pmu };

struct Bianchi3Class {
    Bianchi family;
    Rat mu;  // parameter for r3mu / r3pmu
    friend bool operator==(const Bianchi3Class& a, const Bianchi3Class& b) {
        if (a.family != b.family) return false;
        if (a.family == Bianchi::r3mu || a.family == Bianchi::r3pmu) return a.mu == b.mu;
        return true;
    }
};

std::string bianchi_name(const Bianchi3Class& c);
Bianchi3Class classify_3d(const LieAlgebra& g);

}  // namespace cocal
