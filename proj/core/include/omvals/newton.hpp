#pragma once

#include <string>
#include <vector>

#include "omvals/omtype.hpp"

namespace omvals {

// Side of a Newton polygon.  Finite sides have slope -h/e (gcd(h,e)=1); the
// side of slope -infinity has u0 = infinity and spans [0, ord_phi g].
struct Side {
    bool inf_slope = false;
    long h = 0;
    long e = 1;
    long s0 = 0, s1 = 0;  // abscissas of the endpoints
    Val u0, u1;           // ordinates (u0 may be infinite)

    long E() const { return s1 - s0; }
    Val H() const { return u0.is_inf() ? Val::inf() : Val(u0.get() - u1.get()); }
    long d() const { return E() / e; }  // lattice-point slots
};

// Ordered list of sides, steepest first (slopes strictly increasing).
struct Polygon {
    std::vector<Side> sides;
    long right_s = 0;     // right endpoint (valid when !sides.empty())
    Val right_u = Val(0);

    bool empty() const { return sides.empty(); }
    long length() const;
    bool has_inf_side() const { return !sides.empty() && sides.front().inf_slope; }
    std::string dump() const;  // vertex list, for --debug-polygons
};

// Lower convex hull of the points (s, ords[s]), principal part only (negative
// slopes; a prefix of exact-infinite ordinates yields the -infinity side).
// Throws insufficient_precision when an inexact ordinate could touch the hull.
Polygon polygon_from_points(const std::vector<ValLB>& ords);

// Newton polygon of g at the pending level of t: lower hull of
// (s, v_i(a_s) + s V_i) for the first omega+1 coefficients of the
// phi_i-expansion.
Polygon build_polygon(const OMType& t, long omega, const PIntPoly& g, const Mod* mod = nullptr);

// Sides of slope < -h (the -infinity side always qualifies); h = 0 gives N^-.
Polygon cut_polygon(const Polygon& N, long h);

// Res(S,T) = min(E H', E' H); Res^h subtracts h E E'.  Infinite iff both
// heights are infinite.
Val res_of_sides(const Side& S, const Side& T, long h);

// f_0...f_{i-1} * [ sum Res(S,T) - h l(Nf) l(Ng) ] over the cut polygons.
Val res_partial_polygons(const OMType& t, const Polygon& Nf_cut, const Polygon& Ng_cut, long h);

// Convenience wrapper building both cut polygons at the pending level with
// lengths omega (for f) and alpha (for g).
Val res_partial(const OMType& t, const PIntPoly& f, const PIntPoly& g, long h,
                const Mod* mod = nullptr);

// Partial p-index of a cut polygon: lattice points strictly above the line of
// slope -cs through the right endpoint, on or below the polygon, abscissa >= 1.
// Infinite when the -infinity side spans more than one column.
Val polygon_index(const Polygon& N, long cs);

// Residual polynomial over F_i of the expansion along a finite side: degree
// d = E/e, coefficient j attached to abscissa s0 + j*e.
FFPoly residual_polynomial(const OMType& t, const Side& side, const ExpansionResult& exp,
                           const Mod* mod = nullptr);

// Residual along the touching line of slope -h/e (a single monomial when the
// polygon only touches it in one point).  Used by the Lemma `length` checks.
FFPoly residual_at_slope(const OMType& t, long e, long h, const ExpansionResult& exp,
                         const Mod* mod = nullptr);

}  // namespace omvals
