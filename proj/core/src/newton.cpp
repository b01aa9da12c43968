#include "omvals/newton.hpp"

#include <algorithm>
#include <sstream>

#include "omvals/errors.hpp"

namespace omvals {

long Polygon::length() const {
    long l = 0;
    for (const auto& S : sides) l += S.E();
    return l;
}

std::string Polygon::dump() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& S : sides) {
        if (!first) os << " ";
        first = false;
        os << "(" << S.s0 << "," << S.u0.str() << ")-(" << S.s1 << "," << S.u1.str() << ")";
        if (S.inf_slope)
            os << "@-inf";
        else
            os << "@-" << S.h << "/" << S.e;
    }
    os << "]";
    return os.str();
}

namespace {

long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace

Polygon polygon_from_points(const std::vector<ValLB>& ords) {
    long n = static_cast<long>(ords.size()) - 1;
    // leading run of exact-infinite ordinates -> side of slope -infinity
    long k = 0;
    while (k <= n && ords[static_cast<size_t>(k)].exact && ords[static_cast<size_t>(k)].v.is_inf())
        ++k;
    if (k > n) {
        // identically zero on the window; callers treat as full divisibility
        Polygon N;
        if (n >= 1) {
            Side S;
            S.inf_slope = true;
            S.s0 = 0;
            S.s1 = n;
            S.u0 = Val::inf();
            S.u1 = Val::inf();
            N.sides.push_back(S);
            N.right_s = n;
            N.right_u = Val::inf();
        }
        return N;
    }
    if (!ords[static_cast<size_t>(k)].exact) throw insufficient_precision();

    // hull over the exact finite points at abscissas >= k
    struct Pt {
        long s;
        long u;
    };
    std::vector<Pt> pts;
    for (long s = k; s <= n; ++s) {
        const ValLB& o = ords[static_cast<size_t>(s)];
        if (o.exact && !o.v.is_inf()) pts.push_back({s, o.v.get()});
    }
    std::vector<Pt> hull;
    for (const Pt& q : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // keep b if it is strictly below segment a-q
            if (static_cast<long long>(b.u - a.u) * (q.s - a.s) <
                static_cast<long long>(q.u - a.u) * (b.s - a.s))
                break;
            hull.pop_back();
        }
        hull.push_back(q);
    }
    auto hull_height_num = [&](long s, long& num, long& den) -> bool {
        // height of the hull at abscissa s as num/den; false when s < hull start
        if (s < hull.front().s) return false;
        for (size_t i = 0; i + 1 < hull.size(); ++i) {
            if (s <= hull[i + 1].s) {
                const Pt& a = hull[i];
                const Pt& b = hull[i + 1];
                den = b.s - a.s;
                num = a.u * den + (s - a.s) * (b.u - a.u);
                return true;
            }
        }
        num = hull.back().u;
        den = 1;
        return s <= hull.back().s;
    };
    // inexact ordinates must lie strictly above the hull (and right of the
    // -infinity prefix), otherwise the polygon is undecidable
    for (long s = 0; s <= n; ++s) {
        const ValLB& o = ords[static_cast<size_t>(s)];
        if (o.exact) continue;
        if (s < k) throw insufficient_precision();
        if (o.v.is_inf()) continue;
        long num, den;
        if (!hull_height_num(s, num, den)) throw insufficient_precision();
        if (static_cast<long long>(o.v.get()) * den <= num) throw insufficient_precision();
    }

    Polygon N;
    if (k > 0) {
        Side S;
        S.inf_slope = true;
        S.s0 = 0;
        S.s1 = k;
        S.u0 = Val::inf();
        S.u1 = Val(hull.front().u);
        N.sides.push_back(S);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        const Pt& a = hull[i];
        const Pt& b = hull[i + 1];
        if (b.u >= a.u) break;  // principal part only
        Side S;
        S.s0 = a.s;
        S.s1 = b.s;
        S.u0 = Val(a.u);
        S.u1 = Val(b.u);
        long dh = a.u - b.u, de = b.s - a.s;
        long g = gcd_long(dh, de);
        S.h = dh / g;
        S.e = de / g;
        N.sides.push_back(S);
    }
    if (!N.sides.empty()) {
        N.right_s = N.sides.back().s1;
        N.right_u = N.sides.back().u1;
    } else if (k == 0 && !hull.empty()) {
        // no negative-slope part; an empty principal polygon anchored at the left point
        N.right_s = hull.front().s;
        N.right_u = Val(hull.front().u);
    }
    return N;
}

Polygon build_polygon(const OMType& t, long omega, const PIntPoly& g, const Mod* mod) {
    if (g.is_zero() && g.is_exact()) throw zero_polynomial();
    if (omega < 1) throw error("build_polygon: omega >= 1 required");
    long i = t.order() + 1;
    long V = t.V(i);
    auto exp = phi_expansion(g, t.pending().phi, omega, mod);
    std::vector<ValLB> ords(static_cast<size_t>(omega) + 1);
    for (long s = 0; s <= omega; ++s) {
        PIntPoly missing;
        const PIntPoly* a = s < static_cast<long>(exp.coeffs.size())
                                ? &exp.coeffs[static_cast<size_t>(s)]
                                : &missing;
        if (a->is_zero() && !g.is_exact() && a->is_exact()) {
            // a vanished quotient under reduced arithmetic is only known mod p^nu
            PIntPoly z;
            z.set_precision(g.precision());
            ords[static_cast<size_t>(s)] = maclane_lb(t, i, z, mod);
        } else {
            ords[static_cast<size_t>(s)] = maclane_lb(t, i, *a, mod);
        }
        ords[static_cast<size_t>(s)].v = ords[static_cast<size_t>(s)].v + s * V;
    }
    return polygon_from_points(ords);
}

Polygon cut_polygon(const Polygon& N, long h) {
    Polygon out;
    for (const auto& S : N.sides) {
        if (S.inf_slope || S.h > h * S.e) out.sides.push_back(S);
    }
    if (!out.sides.empty()) {
        out.right_s = out.sides.back().s1;
        out.right_u = out.sides.back().u1;
    }
    return out;
}

Val res_of_sides(const Side& S, const Side& T, long h) {
    Val a = T.H().is_inf() ? Val::inf() : Val(S.E() * T.H().get());
    Val b = S.H().is_inf() ? Val::inf() : Val(T.E() * S.H().get());
    Val m = std::min(a, b);
    if (m.is_inf()) return m;
    return Val(m.get() - h * S.E() * T.E());
}

Val res_partial_polygons(const OMType& t, const Polygon& Nf, const Polygon& Ng, long h) {
    if (Nf.empty() || Ng.empty()) return Val(0);
    long pref = t.f_prod(t.order() - 1);
    long acc = 0;
    for (const auto& S : Nf.sides)
        for (const auto& T : Ng.sides) {
            Val r = res_of_sides(S, T, h);
            if (r.is_inf()) return Val::inf();
            acc += r.get();
        }
    return Val(pref * acc);
}

Val res_partial(const OMType& t, const PIntPoly& f, const PIntPoly& g, long h, const Mod* mod) {
    Polygon Nf = cut_polygon(build_polygon(t, t.pending().omega, f, mod), h);
    Polygon Ng = cut_polygon(build_polygon(t, t.pending().alpha, g, mod), h);
    return res_partial_polygons(t, Nf, Ng, h);
}

Val polygon_index(const Polygon& N, long cs) {
    if (N.empty()) return Val(0);
    long a_r = N.right_s;
    if (N.right_u.is_inf()) return Val::inf();
    long u_r = N.right_u.get();
    long count = 0;
    auto height_floor = [&](long a, long& out) -> bool {  // false: unbounded column
        for (const auto& S : N.sides) {
            if (a < S.s0 || a > S.s1) continue;
            if (S.inf_slope) {
                if (a < S.s1) return false;
                out = S.u1.get();
                return true;
            }
            long num = S.u0.get() * S.e - (a - S.s0) * S.h;
            out = floor_div(num, S.e);
            return true;
        }
        out = std::numeric_limits<long>::min();
        return true;
    };
    for (long a = 1; a <= a_r; ++a) {
        long hN;
        if (!height_floor(a, hN)) return Val::inf();
        long L = u_r + cs * (a_r - a);
        if (hN > L) count += hN - L;
    }
    return Val(count);
}

// ---- residual polynomials ----

namespace {

long floor_mod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

long inv_mod_l(long a, long m) {
    if (m == 1) return 0;
    long t = 0, nt = 1, r = m, nr = floor_mod(a, m);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw invariant_violation("inv_mod_l: not coprime");
    return floor_mod(t, m);
}

// Shared core: coefficients of the residual along the line of slope -h/e with
// v_{i+1}-grade m_total, slots t at abscissas alpha + t e.
FFPoly residual_core(const OMType& t, long e, long h, long m_total, const ExpansionResult& exp,
                     const Mod* mod) {
    const TowerField& F = t.tower();
    long L = t.order() + 1;
    long V = t.V(L);
    long delta = e * V + h;
    long alpha = e == 1 ? 0 : floor_mod(m_total * inv_mod_l(h, e), e);
    long mp = (m_total - alpha * delta) / e;
    FFPoly R{L, {}};
    long navail = static_cast<long>(exp.coeffs.size());
    for (long ts = 0;; ++ts) {
        long s = alpha + ts * e;
        if (s >= navail) break;
        TowerElem c = rev_residual(t, L, exp.coeffs[static_cast<size_t>(s)], mp - ts * delta, mod);
        if (!c.is_zero()) c = F.mul(c, gamma_twist(t, L, ts, mp, delta));
        R.c.push_back(std::move(c));
    }
    R.trim();
    return R;
}

}  // namespace

FFPoly residual_polynomial(const OMType& t, const Side& side, const ExpansionResult& exp,
                           const Mod* mod) {
    if (side.inf_slope) throw error("residual_polynomial: side of slope -infinity");
    long m_total = side.e * side.u0.get() + side.s0 * side.h;
    FFPoly R = residual_core(t, side.e, side.h, m_total, exp, mod);
    // slot ts corresponds to abscissa alpha + ts*e with alpha == s0 (mod e);
    // drop the slots left of the side so coefficient j sits at s0 + j*e
    long t_lo = side.s0 / side.e;
    long d = side.d();
    const TowerField& F = t.tower();
    FFPoly out{R.level, {}};
    out.c.assign(static_cast<size_t>(d) + 1, F.zero(R.level));
    for (long j = 0; j <= d; ++j) {
        long slot = t_lo + j;
        if (slot < static_cast<long>(R.c.size()))
            out.c[static_cast<size_t>(j)] = R.c[static_cast<size_t>(slot)];
    }
    out.trim();
    if (out.degree() != d || out.c[0].is_zero())
        throw invariant_violation("residual_polynomial: endpoints not on the side");
    return out;
}

FFPoly residual_at_slope(const OMType& t, long e, long h, const ExpansionResult& exp,
                         const Mod* mod) {
    long L = t.order() + 1;
    long V = t.V(L);
    // touching grade: min over available terms of e*(v_i(a_s) + sV) + s h
    bool any = false;
    long m_total = 0;
    for (size_t s = 0; s < exp.coeffs.size(); ++s) {
        const PIntPoly& a = exp.coeffs[s];
        if (a.is_zero() && a.is_exact()) continue;
        ValLB lb = maclane_lb(t, L, a, mod);
        if (!lb.exact) throw insufficient_precision();
        if (lb.v.is_inf()) continue;
        long g = e * (lb.v.get() + static_cast<long>(s) * V) + static_cast<long>(s) * h;
        if (!any || g < m_total) {
            m_total = g;
            any = true;
        }
    }
    if (!any) throw zero_polynomial();
    return residual_core(t, e, h, m_total, exp, mod);
}

}  // namespace omvals
