#include "cocal/linalg.hpp"

namespace cocal {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> ds;
    if (n == 0) return ds;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            ds.push_back(n / d);
        }
    }
    return ds;
}

}  // namespace

std::vector<Rat> poly_rational_roots(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    std::vector<Rat> roots;
    if (p.empty()) return roots;
    // strip zero roots
    size_t z = 0;
    while (z < p.size() && sgn(p[z]) == 0) ++z;
    if (z == p.size()) return roots;
    if (z > 0) {
        roots.push_back(Rat(0));
        p.erase(p.begin(), p.begin() + z);
    }
    if (p.size() <= 1) return roots;
    // clear denominators to an integer polynomial
    mpz_class lcm = 1;
    for (auto& c : p) {
        mpz_class den = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> ip;
    for (auto& c : p) ip.push_back(mpz_class(c * Rat(lcm)));
    // candidates num/den with num | ip[0], den | ip.back()
    for (const auto& num : divisors(ip.front()))
        for (const auto& den : divisors(ip.back()))
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                cand.canonicalize();
                if (sgn(poly_eval(p, cand)) == 0) {
                    bool seen = false;
                    for (auto& r : roots) seen |= (r == cand);
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

Poly char_poly(const Mat<Rat>& a) {
    int n = (int)a.size();
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c I
    Poly c(n + 1, Rat(0));
    c[n] = Rat(1);
    Mat<Rat> m = mat_identity<Rat>(n);
    for (int k = 1; k <= n; ++k) {
        m = mat_mul(a, m);
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += m[i][i];
        Rat ck = -tr / k;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) m[i][i] += ck;
    }
    return c;
}

Poly min_poly(const Mat<Rat>& a) {
    int n = (int)a.size();
    Poly m = {Rat(1)};  // constant 1, lcm identity
    for (int i = 0; i < n; ++i) {
        // annihilator of basis vector e_i: first linear relation among e_i, A e_i, ...
        Vec<Rat> v(n, Rat(0));
        v[i] = Rat(1);
        Mat<Rat> krylov;  // columns as rows here
        krylov.push_back(v);
        Poly ann;
        for (int k = 1; k <= n; ++k) {
            v = mat_apply(a, v);
            // is v a combination of previous krylov vectors?
            Mat<Rat> sys = mat_zero<Rat>(n, (int)krylov.size());
            for (int r = 0; r < n; ++r)
                for (size_t c = 0; c < krylov.size(); ++c) sys[r][c] = krylov[c][r];
            auto sol = solve(sys, v);
            if (sol) {
                ann.assign(k + 1, Rat(0));
                for (int j = 0; j < k; ++j) ann[j] = -(*sol)[j];
                ann[k] = Rat(1);
                break;
            }
            krylov.push_back(v);
        }
        // lcm(m, ann) = m * ann / gcd
        Poly g = poly_gcd(m, ann);
        m = poly_monic(poly_mul(m, poly_divmod(ann, g).first));
    }
    return m;
}

}  // namespace cocal
