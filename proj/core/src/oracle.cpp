#include "omvals/oracle.hpp"

#include <utility>

#include "omvals/errors.hpp"

namespace omvals {

namespace {

Int int_pow(const Int& a, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, coefficients over Z.
PIntPoly prem(PIntPoly a, const PIntPoly& b) {
    long db = b.degree();
    const Int& lb = b.lc();
    long steps = a.degree() - db + 1;
    long done = 0;
    while (!a.is_zero() && a.degree() >= db) {
        long k = a.degree() - db;
        Int la = a.lc();
        std::vector<Int> c(a.coeffs());
        for (auto& x : c) x *= lb;
        for (long j = 0; j <= db; ++j)
            mpz_submul(c[static_cast<size_t>(j + k)].get_mpz_t(), la.get_mpz_t(),
                       b.coeff(j).get_mpz_t());
        a = PIntPoly(std::move(c));
        ++done;
    }
    // keep the classical normalization lc(b)^(delta+1)
    for (; done < steps; ++done) a = poly_mul_int(a, lb);
    return a;
}

PIntPoly divexact_int(const PIntPoly& a, const Int& d) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return PIntPoly(std::move(c));
}

}  // namespace

Int naive_resultant(const PIntPoly& f, const PIntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw zero_polynomial();
    PIntPoly A = f, B = g;
    int sign = 1;
    Int ca = poly_content(A);
    if (A.lc() < 0) ca = -ca;
    Int cb = poly_content(B);
    if (B.lc() < 0) cb = -cb;
    A = divexact_int(A, ca);
    B = divexact_int(B, cb);
    Int t = int_pow(ca, B.degree()) * int_pow(cb, A.degree());
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        if (A.degree() == 0) return sign * t;
        return sign * t * int_pow(B.lc(), A.degree());
    }
    Int gpow = 1, h = 1;
    while (B.degree() > 0) {
        long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        PIntPoly R = prem(A, B);
        A = std::move(B);
        if (R.is_zero()) return 0;
        Int denom = gpow * int_pow(h, delta);
        B = divexact_int(R, denom);
        gpow = A.lc();
        if (delta > 0) {
            Int num = int_pow(gpow, delta);
            Int den = int_pow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        // delta == 0: h unchanged
    }
    // deg B == 0
    Int num = int_pow(B.lc(), A.degree());
    Int den = int_pow(h, A.degree() - 1);
    Int res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * t * res;
}

Int naive_discriminant(const PIntPoly& g) {
    if (g.degree() < 1) throw error("naive_discriminant: degree >= 1 required");
    if (g.degree() == 1) return 1;
    PIntPoly gp = poly_derivative(g);
    Int r = naive_resultant(g, gp);
    long n = g.degree();
    Int d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), g.lc().get_mpz_t());
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

}  // namespace omvals
