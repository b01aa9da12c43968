#include "omvals/omtype.hpp"

#include <algorithm>
#include <cassert>

#include "omvals/errors.hpp"

namespace omvals {

ValLB min_combine(const ValLB& a, const ValLB& b) {
    // exact values decide the min; a bound only survives if it could undercut
    if (a.exact && b.exact) return {std::min(a.v, b.v), true};
    if (a.exact && !b.exact) return a.v <= b.v ? a : ValLB{b.v, false};
    if (!a.exact && b.exact) return b.v <= a.v ? b : ValLB{a.v, false};
    return {std::min(a.v, b.v), false};
}

// ---- OMType ----

OMType OMType::seed(const Int& p, const TowerField& base, const FFPoly& psi0, long omega,
                    long alpha) {
    TowerField tw = extend_tower(base, psi0);
    std::vector<Int> c(psi0.c.size());
    for (size_t i = 0; i < psi0.c.size(); ++i) c[i] = Int(static_cast<unsigned long>(psi0.c[i].c0));
    PendingLevel top;
    top.phi = PIntPoly(std::move(c));
    top.omega = omega;
    top.alpha = alpha;
    top.cs = 0;
    return OMType(p, std::move(tw), std::move(top));
}

long OMType::m(long i) const {
    if (i <= order()) return lv_[static_cast<size_t>(i - 1)].m;
    return top_.phi.degree();
}

long OMType::V(long i) const {
    if (i <= order()) return lv_[static_cast<size_t>(i - 1)].V;
    if (order() == 0) return 0;  // V_1 = 0
    const TypeLevel& last = lv_.back();
    return last.e * last.f * (last.e * last.V + last.h);
}

long OMType::e_prod(long i) const {
    long r = 1;
    for (long j = 1; j <= i; ++j) r *= lv_[static_cast<size_t>(j - 1)].e;
    return r;
}

long OMType::f_prod(long i) const {
    long r = f0();
    for (long j = 1; j <= i; ++j) r *= lv_[static_cast<size_t>(j - 1)].f;
    return r;
}

void OMType::extend(long e, long h, const FFPoly& psi, PIntPoly new_phi, long new_omega,
                    long new_alpha) {
    TypeLevel sealed;
    sealed.phi = top_.phi;
    sealed.e = e;
    sealed.h = h;
    sealed.m = top_.phi.degree();
    sealed.V = V(order() + 1);
    sealed.f = psi.degree();
    tower_ = extend_tower(tower_, psi);
    lv_.push_back(std::move(sealed));
    top_.phi = std::move(new_phi);
    top_.omega = new_omega;
    top_.alpha = new_alpha;
    top_.cs = 0;
}

void OMType::refine(PIntPoly new_phi, long new_omega, long new_alpha, long new_cs) {
    if (new_phi.degree() != top_.phi.degree())
        throw invariant_violation("refine: representative degree changed");
    top_.phi = std::move(new_phi);
    top_.omega = new_omega;
    top_.alpha = new_alpha;
    top_.cs = new_cs;
}

OMType OMType::truncated(long ord) const {
    if (ord >= order()) return *this;
    OMType t(p_, tower_.truncated(ord + 1), PendingLevel{});
    t.lv_.assign(lv_.begin(), lv_.begin() + ord);
    t.top_.phi = lv_[static_cast<size_t>(ord)].phi;
    return t;
}

std::string OMType::chain_str() const {
    std::string s = "p=" + p_.get_str();
    s += ";psi0=" + tower_.psi(0).str();
    for (const auto& L : lv_) {
        s += ";(" + L.phi.str() + "," + std::to_string(-L.h) + "/" + std::to_string(L.e) + ")";
    }
    s += ";top=" + top_.phi.str();
    return s;
}

// ---- MacLane valuations ----

static ValLB vp_lb_int(const Int& p, const Int& c, long tag) {
    if (c == 0)
        return tag == PIntPoly::kExact ? ValLB::infinite() : ValLB::at_least(tag);
    return ValLB::known(vp_int(p, c).get());
}

ValLB maclane_lb(const OMType& t, long i, const PIntPoly& g, const Mod* mod) {
    if (g.is_zero()) {
        if (g.is_exact()) return ValLB::infinite();
        return ValLB::at_least(g.precision() * t.vp_scale(i));
    }
    if (i == 1) {
        ValLB acc = ValLB::infinite();
        for (const auto& c : g.coeffs()) acc = min_combine(acc, vp_lb_int(t.p(), c, g.precision()));
        return acc;
    }
    const TypeLevel& L = t.level(i - 1);
    long delta = L.e * L.V + L.h;
    auto exp = phi_expansion(g, L.phi, std::nullopt, mod);
    ValLB acc = ValLB::infinite();
    for (size_t s = 0; s < exp.coeffs.size(); ++s) {
        if (exp.coeffs[s].is_zero() && exp.coeffs[s].is_exact()) continue;
        ValLB sub = maclane_lb(t, i - 1, exp.coeffs[s], mod);
        ValLB term{sub.v * L.e + static_cast<long>(s) * delta, sub.exact};
        acc = min_combine(acc, term);
    }
    return acc;
}

long maclane_value(const OMType& t, long i, const PIntPoly& g, const Mod* mod) {
    if (g.is_zero() && g.is_exact()) throw zero_polynomial();
    ValLB r = maclane_lb(t, i, g, mod);
    if (!r.exact) throw insufficient_precision();
    if (r.v.is_inf()) throw zero_polynomial();
    return r.v.get();
}

Rat theta_valuation(const OMType& t, const PIntPoly& g, const Mod* mod) {
    if (g.is_zero()) throw zero_polynomial();
    if (g.degree() >= t.m(t.order() + 1))
        throw error("theta_valuation: deg g must be < m_{r+1}");
    long v = maclane_value(t, t.order() + 1, g, mod);
    Rat r(v, t.e_prod(t.order()));
    r.canonicalize();
    return r;
}

// ---- Okutsu invariants ----

OkutsuInvariants okutsu_invariants(const OMType& t) {
    OkutsuInvariants inv;
    long r = t.order();
    inv.depth = r;
    inv.e = t.e_prod(r);
    inv.f = t.f_prod(r);
    Rat mu = 0, nu = 0;
    for (long j = 1; j <= r; ++j) {
        long tail = 1;
        for (long l = j; l <= r; ++l) tail *= t.level(l).e * t.level(l).f;
        Rat term(t.level(j).h, t.e_prod(j));
        term.canonicalize();
        mu += (tail - 1) * term;
        nu += term;
        inv.nu.push_back(nu);
    }
    inv.mu = mu;
    long n = inv.e * inv.f;
    Rat ind = Rat(n, 2) * (mu - 1 + Rat(1, inv.e));
    ind.canonicalize();
    if (ind.get_den() != 1 || ind < 0) throw incomplete_type();
    inv.ind = static_cast<long>(ind.get_num().get_si());
    Int fq;
    mpz_fdiv_q(fq.get_mpz_t(), mu.get_num().get_mpz_t(), mu.get_den().get_mpz_t());
    inv.exponent = static_cast<long>(fq.get_si());
    Rat cond = inv.e * mu - inv.e + 1;
    cond.canonicalize();
    if (cond.get_den() != 1) throw incomplete_type();
    inv.conductor = static_cast<long>(cond.get_num().get_si());
    if (inv.f * inv.conductor != 2 * inv.ind)
        throw invariant_violation("okutsu_invariants: conductor identity failed");
    return inv;
}

// ---- graded residue machinery ----

namespace {

long floor_mod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

long inv_mod(long a, long m) {
    if (m == 1) return 0;
    long t = 0, nt = 1, r = m, nr = floor_mod(a, m);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw invariant_violation("inv_mod: not coprime");
    return floor_mod(t, m);
}

}  // namespace

FormalMonomial canonical_unit(const OMType& t, long L, long m) {
    if (L == 1) return FormalMonomial{m, {}};
    const TypeLevel& lv = t.level(L - 1);
    long delta = lv.e * lv.V + lv.h;
    long alpha = lv.e == 1 ? 0 : floor_mod(m * inv_mod(lv.h, lv.e), lv.e);
    long mp = (m - alpha * delta) / lv.e;
    FormalMonomial U = canonical_unit(t, L - 1, mp);
    U.cphi.push_back(alpha);
    return U;
}

TowerElem monomial_class(const OMType& t, long L, const FormalMonomial& M) {
    const TowerField& F = t.tower();
    if (L == 1) {
        if (M.c0 != 0 || !M.cphi.empty())
            throw invariant_violation("monomial_class: nonzero grade at level 1");
        return F.one(1);
    }
    const TypeLevel& lv = t.level(L - 1);
    long c = M.cphi[static_cast<size_t>(L - 2)];
    if (c % lv.e != 0) throw invariant_violation("monomial_class: phi exponent not divisible");
    long q = c / lv.e;
    long delta = lv.e * lv.V + lv.h;
    FormalMonomial S = canonical_unit(t, L - 1, delta);
    FormalMonomial M2;
    M2.c0 = M.c0 + q * S.c0;
    M2.cphi.assign(static_cast<size_t>(L - 2), 0);
    for (size_t j = 0; j + 1 < static_cast<size_t>(L - 1); ++j) {
        M2.cphi[j] = M.cphi[j] + q * S.cphi[j];
    }
    TowerElem cls = monomial_class(t, L - 1, M2);
    TowerElem z = F.gen(L);
    return F.mul(F.pow(z, Int(q)), F.embed(cls, L));
}

TowerElem gamma_twist(const OMType& t, long L, long tslot, long mp, long delta) {
    const TowerField& F = t.tower();
    if (L == 1 || tslot == 0) return F.one(L);
    FormalMonomial S = canonical_unit(t, L, delta);
    FormalMonomial A = canonical_unit(t, L, mp - tslot * delta);
    FormalMonomial B = canonical_unit(t, L, mp);
    FormalMonomial M;
    M.c0 = tslot * S.c0 + A.c0 - B.c0;
    M.cphi.assign(S.cphi.size(), 0);
    for (size_t j = 0; j < S.cphi.size(); ++j)
        M.cphi[j] = tslot * S.cphi[j] + A.cphi[j] - B.cphi[j];
    return monomial_class(t, L, M);
}

TowerElem rev_residual(const OMType& t, long L, const PIntPoly& a, long m, const Mod* mod) {
    const TowerField& F = t.tower();
    if (a.is_zero()) {
        if (!a.is_exact() && a.precision() * t.vp_scale(L) <= m) throw insufficient_precision();
        return F.zero(L);
    }
    if (L == 1) {
        // digits (c / p^m) mod p evaluated at z_0
        std::vector<TowerElem> digits(a.coeffs().size(), F.zero(0));
        Int pm, q;
        for (size_t j = 0; j < a.coeffs().size(); ++j) {
            const Int& c = a.coeffs()[j];
            if (c == 0) {
                if (!a.is_exact() && a.precision() <= m) throw insufficient_precision();
                continue;
            }
            long v = vp_int(t.p(), c).get();
            if (v < m) throw invariant_violation("rev_residual: value below target");
            if (v > m) continue;
            if (m >= 0) {
                pm = pow_int(t.p(), static_cast<unsigned long>(m));
                q = c / pm;
            } else {
                q = c * pow_int(t.p(), static_cast<unsigned long>(-m));
            }
            Int digit;
            mpz_mod(digit.get_mpz_t(), q.get_mpz_t(), t.p().get_mpz_t());
            digits[j] = F.from_ui(0, mpz_get_ui(digit.get_mpz_t()));
        }
        TowerElem x = F.gen(1);
        TowerElem acc = F.zero(1);
        for (size_t j = digits.size(); j-- > 0;)
            acc = F.add(F.mul(acc, x), F.embed(digits[j], 1));
        return acc;
    }
    const TypeLevel& lv = t.level(L - 1);
    long delta = lv.e * lv.V + lv.h;
    long alpha = lv.e == 1 ? 0 : floor_mod(m * inv_mod(lv.h, lv.e), lv.e);
    long mp = (m - alpha * delta) / lv.e;
    auto exp = phi_expansion(a, lv.phi, std::nullopt, mod);
    TowerElem z = F.gen(L);
    TowerElem acc = F.zero(L);
    for (long ts = 0;; ++ts) {
        long s = alpha + ts * lv.e;
        if (s >= static_cast<long>(exp.coeffs.size())) break;
        TowerElem sub = rev_residual(t, L - 1, exp.coeffs[static_cast<size_t>(s)],
                                     mp - ts * delta, mod);
        if (sub.is_zero()) continue;
        TowerElem g = gamma_twist(t, L - 1, ts, mp, delta);
        acc = F.add(acc, F.mul(F.pow(z, Int(ts)), F.embed(F.mul(sub, g), L)));
    }
    return acc;
}

PIntPoly lift_residual(const OMType& t, long L, const TowerElem& b, long m) {
    const TowerField& F = t.tower();
    if (b.is_zero()) return PIntPoly();
    if (L == 1) {
        if (m < 0) throw invariant_violation("lift_residual: negative target at level 1");
        Int pm = pow_int(t.p(), static_cast<unsigned long>(m));
        std::vector<Int> c(b.up.size());
        for (size_t j = 0; j < b.up.size(); ++j)
            c[j] = Int(static_cast<unsigned long>(b.up[j].c0)) * pm;
        return PIntPoly(std::move(c));
    }
    const TypeLevel& lv = t.level(L - 1);
    long delta = lv.e * lv.V + lv.h;
    long alpha = lv.e == 1 ? 0 : floor_mod(m * inv_mod(lv.h, lv.e), lv.e);
    long mp = (m - alpha * delta) / lv.e;
    PIntPoly acc;
    for (size_t ts = 0; ts < b.up.size(); ++ts) {
        const TowerElem& bt = b.up[ts];
        if (bt.is_zero()) continue;
        TowerElem g = gamma_twist(t, L - 1, static_cast<long>(ts), mp, delta);
        TowerElem target = F.mul(bt, F.inv(g));
        PIntPoly piece = lift_residual(t, L - 1, target, mp - static_cast<long>(ts) * delta);
        long s = alpha + static_cast<long>(ts) * lv.e;
        piece = poly_mul(piece, poly_pow(lv.phi, static_cast<unsigned long>(s)));
        acc = poly_add(acc, piece);
    }
    return acc;
}

PIntPoly build_representative(const OMType& t, long e, long h, const FFPoly& psi) {
    const TowerField& F = t.tower();
    long L = t.order() + 1;
    if (psi.degree() == 1 && psi.c[0].is_zero()) throw psi_is_y();
    long f = psi.degree();
    long V = t.V(L);
    long delta = e * V + h;
    const PIntPoly& phi = t.pending().phi;

    PIntPoly result = poly_pow(phi, static_cast<unsigned long>(e * f));
    TowerElem gamma_f = gamma_twist(t, L, f, f * delta, delta);
    for (long k = 0; k < f; ++k) {
        const TowerElem& bk = psi.c[static_cast<size_t>(k)];
        if (bk.is_zero()) continue;
        TowerElem gk = gamma_twist(t, L, k, f * delta, delta);
        TowerElem target = F.mul(gamma_f, F.mul(bk, F.inv(gk)));
        PIntPoly A = lift_residual(t, L, target, (f - k) * delta);
        if (k > 0) A = poly_mul(A, poly_pow(phi, static_cast<unsigned long>(e * k)));
        result = poly_add(result, A);
    }
    // simplify: terms divisible by p^M with M*scale above the whole side change nothing
    long u0 = e * f * V + f * h;
    long M = u0 / t.vp_scale(L) + 1;
    result = reduce_mod_power(result, t.p(), M);
    result.set_precision(PIntPoly::kExact);
    if (result.degree() != e * f * t.m(L) || !result.is_monic())
        throw invariant_violation("build_representative: degree or monicity contract failed");
    return result;
}

}  // namespace omvals
