#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omvals/ffield.hpp"
#include "omvals/intops.hpp"
#include "omvals/poly.hpp"

namespace omvals {

// Valuation that may only be known as a lower bound (the coefficient reduced
// to zero at the working precision).  exact=false means "true value >= v".
struct ValLB {
    Val v;
    bool exact = true;

    static ValLB known(long x) { return {Val(x), true}; }
    static ValLB at_least(long x) { return {Val(x), false}; }
    static ValLB infinite() { return {Val::inf(), true}; }
};

ValLB min_combine(const ValLB& a, const ValLB& b);

// Sealed level j >= 1 of a type: slope lambda_j = -h_j/e_j, level polynomial
// phi_j, and the derived invariants.  psi_j lives in the tower.
struct TypeLevel {
    PIntPoly phi;
    long h = 0;
    long e = 1;
    long m = 1;  // deg phi_j
    long V = 0;  // v_j(phi_j)
    long f = 1;  // deg psi_j
};

// Working data of the open level i = order+1: the current representative and
// the a-priori polygon lengths / cutting slope of the optimized algorithm.
struct PendingLevel {
    PIntPoly phi;
    long omega = 0;
    long alpha = 0;  // used only by the resultant driver
    long cs = 0;
};

// A type of order r with its residue tower F_0 c F_1 c ... c F_{r+1} and the
// invariants of levels 1..r, loaded with pending level-(r+1) data.
class OMType {
  public:
    OMType(Int p, TowerField tower, PendingLevel top)
        : p_(std::move(p)), tower_(std::move(tower)), top_(std::move(top)) {}

    // Order-0 type from a residual factor psi0 of f mod p; phi_1 is the monic
    // coefficient-wise lift and omega the multiplicity of psi0.
    static OMType seed(const Int& p, const TowerField& base, const FFPoly& psi0, long omega,
                       long alpha = 0);

    const Int& p() const { return p_; }
    long order() const { return static_cast<long>(lv_.size()); }
    const TowerField& tower() const { return tower_; }
    const std::vector<TypeLevel>& levels() const { return lv_; }
    const TypeLevel& level(long j) const { return lv_[static_cast<size_t>(j - 1)]; }  // 1-based
    PendingLevel& pending() { return top_; }
    const PendingLevel& pending() const { return top_; }

    long f0() const { return tower_.f(0); }
    // deg phi_i for 1 <= i <= order+1 (the pending level included).
    long m(long i) const;
    // v_i(phi_i) for 1 <= i <= order+1, from the recurrence.
    long V(long i) const;
    // e_1...e_i (i <= order); i = 0 gives 1.
    long e_prod(long i) const;
    // f_0 f_1 ... f_i; f_prod(-1) = 1.
    long f_prod(long i) const;
    // v_i(p) = e_1...e_{i-1}
    long vp_scale(long i) const { return e_prod(i - 1); }

    // Seal the pending level with side data (e, h, psi) and open level i+1
    // with representative new_phi.  Extends the tower by psi.
    void extend(long e, long h, const FFPoly& psi, PIntPoly new_phi, long new_omega,
                long new_alpha);
    // Replace the pending representative (same degree), set the cutting slope.
    void refine(PIntPoly new_phi, long new_omega, long new_alpha, long new_cs);

    // Type truncated to order `ord` with pending phi = phi_{ord+1}; for
    // per-level analysis of a deeper type.
    OMType truncated(long ord) const;

    std::string chain_str() const;  // serialized phi chain (canonical ordering key)

  private:
    Int p_;
    TowerField tower_;  // psi_0 .. psi_order
    std::vector<TypeLevel> lv_;
    PendingLevel top_;
};

// ---- MacLane valuations ----

// v_i(g) with precision tracking; 1 <= i <= order+1.  mod describes the
// reduction context used for intermediate expansions (may be null).
ValLB maclane_lb(const OMType& t, long i, const PIntPoly& g, const Mod* mod = nullptr);

// v_i(g) as an integer; throws insufficient_precision if the working
// precision cannot decide it, zero_polynomial for g = 0.
long maclane_value(const OMType& t, long i, const PIntPoly& g, const Mod* mod = nullptr);

// v(g(theta)) = v_{r+1}(g)/(e_1...e_r) for deg g < m_{r+1}, exact rational.
Rat theta_valuation(const OMType& t, const PIntPoly& g, const Mod* mod = nullptr);

// ---- Okutsu invariants ----

struct OkutsuInvariants {
    long depth = 0;            // r
    long e = 1;                // e_1...e_r
    long f = 1;                // f_0 f_1...f_r
    Rat mu;                    // mu_r
    std::vector<Rat> nu;       // nu_1..nu_r
    long ind = 0;              // (n/2)(mu - 1 + 1/e), an integer
    long exponent = 0;         // floor(mu)
    long conductor = 0;        // e*mu - e + 1 = 2 ind / f
    long n() const { return e * f; }
};

// Invariants of a complete type (the caller asserts completeness; the
// identities conductor = e*mu-e+1 = 2 ind/f are checked here).
OkutsuInvariants okutsu_invariants(const OMType& t);

// ---- graded residue machinery ----
//
// Residual images are normalized against canonical monomials p^{c0} phi_1^{c1}
// ... built from the level data; this fixes the residual operators up to the
// one convention used everywhere (construction, residuals, lifts).

struct FormalMonomial {
    long c0 = 0;               // exponent of p
    std::vector<long> cphi;    // exponents of phi_1..phi_{L-1}
};

// Canonical monomial of v_L-value m (phi-exponents canonical in [0, e_j)).
FormalMonomial canonical_unit(const OMType& t, long L, long m);

// Class in F_L of a formal monomial of v_L-value 0.
TowerElem monomial_class(const OMType& t, long L, const FormalMonomial& M);

// The unit gamma_L(t) = class(S^t U_L(mp - t*delta) / U_L(mp)), S = U_L(delta).
TowerElem gamma_twist(const OMType& t, long L, long tslot, long mp, long delta);

// Residual image in F_L of a polynomial a (deg a < m_L) at value m: the class
// of a / U_L(m).  Zero iff v_L(a) > m; requires v_L(a) >= m.
TowerElem rev_residual(const OMType& t, long L, const PIntPoly& a, long m,
                       const Mod* mod = nullptr);

// Inverse of rev_residual: a polynomial of degree < m_L with v_L = m and
// residual image b.  m and all recursive targets must be non-negative.
PIntPoly lift_residual(const OMType& t, long L, const TowerElem& b, long m);

// Monic representative of the type extended by the side data (e, h, psi) at
// the pending level: degree e * deg(psi) * m_pending, residual ~ psi.
PIntPoly build_representative(const OMType& t, long e, long h, const FFPoly& psi);

}  // namespace omvals
