#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omvals/intops.hpp"

namespace omvals {

// Reduction context: coefficients are canonical representatives in [0, p^nu).
struct Mod {
    Int p;
    long nu;
    Int pnu;

    Mod(Int p_, long nu_) : p(std::move(p_)), nu(nu_), pnu(pow_int(p, static_cast<unsigned long>(nu_))) {}
};

// Dense polynomial over Z, ascending coefficients, no trailing zeros.
// The precision tag records whether coefficients are exact integers or
// canonical representatives modulo p^nu for the ambient prime.
class PIntPoly {
  public:
    static constexpr long kExact = -1;

    PIntPoly() = default;
    explicit PIntPoly(std::vector<Int> coeffs, long prec = kExact)
        : c_(std::move(coeffs)), prec_(prec) {
        normalize();
    }
    static PIntPoly constant(Int c) { return PIntPoly({std::move(c)}); }
    // x^k
    static PIntPoly xpow(long k) {
        std::vector<Int> c(static_cast<size_t>(k) + 1, 0);
        c.back() = 1;
        return PIntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const Int& lc() const;
    bool is_monic() const { return !is_zero() && lc() == 1; }
    const Int& coeff(long i) const;  // 0 outside range
    const std::vector<Int>& coeffs() const { return c_; }
    std::vector<Int>& coeffs_mut() { return c_; }

    long precision() const { return prec_; }
    bool is_exact() const { return prec_ == kExact; }
    void set_precision(long prec) { prec_ = prec; }

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    bool operator==(const PIntPoly& o) const { return c_ == o.c_; }

    std::string str() const;  // text grammar, e.g. "x^2+3*x+5"

  private:
    std::vector<Int> c_;
    long prec_ = kExact;
};

// Canonical phi-expansion g = sum a_s phi^s, deg a_s < deg phi.
struct ExpansionResult {
    PIntPoly phi;
    std::vector<PIntPoly> coeffs;  // a_0, a_1, ...

    PIntPoly reconstruct() const;
};

// One term of a multiadic expansion: c * phi_1^{j_1} ... phi_r^{j_r}.
struct MultiadicTerm {
    std::vector<long> exps;  // j_1..j_r
    PIntPoly c;              // deg c < deg phi_1
};
struct MultiadicExpansion {
    std::vector<PIntPoly> chain;  // phi_1..phi_r
    std::vector<MultiadicTerm> terms;

    PIntPoly reconstruct() const;
};

long take_prec(const PIntPoly& a, const PIntPoly& b, const Mod* mod);

PIntPoly poly_add(const PIntPoly& a, const PIntPoly& b, const Mod* mod = nullptr);
PIntPoly poly_sub(const PIntPoly& a, const PIntPoly& b, const Mod* mod = nullptr);
PIntPoly poly_neg(const PIntPoly& a, const Mod* mod = nullptr);
PIntPoly poly_mul(const PIntPoly& a, const PIntPoly& b, const Mod* mod = nullptr);
PIntPoly poly_mul_int(const PIntPoly& a, const Int& k, const Mod* mod = nullptr);
PIntPoly poly_pow(const PIntPoly& a, unsigned long e, const Mod* mod = nullptr);
PIntPoly poly_derivative(const PIntPoly& a);
Int poly_eval(const PIntPoly& a, const Int& x);
PIntPoly poly_shift_x(const PIntPoly& a, const Int& t);  // a(x + t)

// Division with remainder by a monic divisor; exact over Z when mod is null.
void divrem_monic(const PIntPoly& num, const PIntPoly& den, PIntPoly& q, PIntPoly& r,
                  const Mod* mod = nullptr);

// First `count+1` coefficients of the canonical phi-expansion (all if count is
// unset).  phi must be monic of degree >= 1.
ExpansionResult phi_expansion(const PIntPoly& g, const PIntPoly& phi,
                              std::optional<long> count = std::nullopt,
                              const Mod* mod = nullptr);

// Nested expansion along a chain of monic polynomials of strictly increasing,
// successively dividing degrees.
MultiadicExpansion multiadic_expansion(const PIntPoly& g, const std::vector<PIntPoly>& chain);

// Coefficients replaced by canonical representatives in [0, p^m).
PIntPoly reduce_mod_power(const PIntPoly& g, const Int& p, long m);

Int poly_content(const PIntPoly& g);

// gcd(g, g') certificate: true means gcd is constant (g squarefree over Q).
// Uses a modular screen first and the exact subresultant gcd as fallback.
bool squarefree_over_q(const PIntPoly& g);

// Exact gcd over Z (primitive part), via the subresultant PRS.
PIntPoly poly_gcd_z(PIntPoly a, PIntPoly b);

// Text grammar: sum of terms `[+-] c`, `[+-] c*x^k`, `[+-] x^k`, `[+-] x`.
PIntPoly parse_poly(const std::string& text);

}  // namespace omvals
