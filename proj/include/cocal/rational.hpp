#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cocal {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) as long as they are built through arithmetic;
// values parsed from text are canonicalized explicitly.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_parse(const std::string& in) {
    std::string s = in;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int rat_sign(const Rat& q) { return sgn(q); }

// True iff q is the square of a rational; if so *root is the nonnegative root.
inline bool rat_is_square(const Rat& q, Rat* root = nullptr) {
    if (sgn(q) < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rat(rn, rd);
        root->canonicalize();
    }
    return true;
}

// Element of Q(sqrt(rad)): value a + b*sqrt(rad). Pure rationals carry
// rad == 0. The radicand is an arbitrary positive non-square rational;
// binary operations require compatible radicands.
struct Quad {
    Rat a, b, rad;

    Quad() : a(0), b(0), rad(0) {}
    Quad(const Rat& r) : a(r), b(0), rad(0) {}
    Quad(long n) : a(rat(n)), b(0), rad(0) {}
    Quad(const Rat& a_, const Rat& b_, const Rat& rad_) : a(a_), b(b_), rad(rad_) { normalize(); }

    void normalize() {
        if (sgn(b) == 0) {
            rad = 0;
            return;
        }
        if (sgn(rad) < 0) throw std::invalid_argument("negative radicand");
        Rat root;
        if (rat_is_square(rad, &root)) {
            a += b * root;
            b = 0;
            rad = 0;
        }
    }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    // Exact sign of a + b*sqrt(rad).
    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 * rad
        int c = cmp(a * a, b * b * rad);
        return c == 0 ? 0 : (c > 0 ? sa : sb);
    }

    static Rat join_rad(const Quad& x, const Quad& y) {
        if (sgn(x.b) == 0) return y.rad;
        if (sgn(y.b) == 0) return x.rad;
        if (x.rad != y.rad) throw std::invalid_argument("mixed quadratic extensions");
        return x.rad;
    }

    friend Quad operator+(const Quad& x, const Quad& y) {
        return Quad(x.a + y.a, x.b + y.b, join_rad(x, y));
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        return Quad(x.a - y.a, x.b - y.b, join_rad(x, y));
    }
    friend Quad operator-(const Quad& x) { return Quad(-x.a, -x.b, x.rad); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        Rat d = join_rad(x, y);
        return Quad(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        if (y.is_zero()) throw std::domain_error("division by zero");
        Rat d = join_rad(x, y);
        Rat n = y.a * y.a - y.b * y.b * d;  // norm of y, nonzero since sqrt(d) irrational
        Quad conj(y.a / n, -y.b / n, d);
        return x * conj;
    }
    Quad& operator+=(const Quad& y) { return *this = *this + y; }
    Quad& operator-=(const Quad& y) { return *this = *this - y; }
    Quad& operator*=(const Quad& y) { return *this = *this * y; }
    Quad& operator/=(const Quad& y) { return *this = *this / y; }

    friend bool operator==(const Quad& x, const Quad& y) {
        if (x.a != y.a || x.b != y.b) return false;
        return sgn(x.b) == 0 || x.rad == y.rad;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    // Rational part accessor for values known to be rational.
    const Rat& as_rat() const {
        if (!is_rational()) throw std::domain_error("value not rational");
        return a;
    }

    std::string str() const {
        if (is_rational()) return rat_str(a);
        std::string s;
        if (sgn(a) != 0) s = rat_str(a) + (sgn(b) > 0 ? "+" : "");
        if (b == 1)
            s += "sqrt(" + rat_str(rad) + ")";
        else if (b == -1)
            s += "-sqrt(" + rat_str(rad) + ")";
        else
            s += rat_str(b) + "*sqrt(" + rat_str(rad) + ")";
        return s;
    }
};

// sqrt of a nonnegative rational as a Quad (exact when square).
inline Quad quad_sqrt(const Rat& c) {
    if (sgn(c) < 0) throw std::domain_error("sqrt of negative rational");
    Rat root;
    if (rat_is_square(c, &root)) return Quad(root);
    return Quad(Rat(0), Rat(1), c);
}

// Field trait helpers shared by the templated exterior/linear algebra.
template <class F>
inline bool is_zero(const F& x) {
    return x == F(0);
}
template <>
inline bool is_zero<Rat>(const Rat& x) {
    return sgn(x) == 0;
}
template <>
inline bool is_zero<Quad>(const Quad& x) {
    return x.is_zero();
}

template <class F>
inline int field_sign(const F& x);
template <>
inline int field_sign<Rat>(const Rat& x) {
    return sgn(x);
}
template <>
inline int field_sign<Quad>(const Quad& x) {
    return x.sign();
}

inline double to_double(const Rat& x) { return x.get_d(); }
inline double to_double(const Quad& x) {
    double v = x.a.get_d();
    if (sgn(x.b) != 0) v += x.b.get_d() * std::sqrt(x.rad.get_d());
    return v;
}

}  // namespace cocal
