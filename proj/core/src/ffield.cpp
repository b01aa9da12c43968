#include "omvals/ffield.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "omvals/config.hpp"
#include "omvals/errors.hpp"

namespace omvals {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::string TowerElem::str() const {
    if (level == 0) return std::to_string(c0);
    std::string s = "(";
    for (size_t i = 0; i < up.size(); ++i) {
        if (i) s += ",";
        s += up[i].str();
    }
    s += ")";
    return s;
}

int cmp(const TowerElem& a, const TowerElem& b) {
    if (a.level != b.level) return a.level < b.level ? -1 : 1;
    if (a.level == 0) return a.c0 == b.c0 ? 0 : (a.c0 < b.c0 ? -1 : 1);
    for (size_t i = a.up.size(); i-- > 0;) {
        int c = cmp(a.up[i], b.up[i]);
        if (c) return c;
    }
    return 0;
}

std::string FFPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].str();
    }
    os << "]@" << level;
    return os.str();
}

int cmp(const FFPoly& a, const FFPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.c.size(); i-- > 0;) {
        int r = cmp(a.c[i], b.c[i]);
        if (r) return r;
    }
    return 0;
}

TowerField::TowerField(const Int& p) : p_(p) {
    if (!is_prime(p)) throw param_out_of_range("TowerField: p must be prime");
    if (!p.fits_ulong_p()) throw param_out_of_range("TowerField: p must fit in 64 bits");
    pu_ = mpz_get_ui(p.get_mpz_t());
}

Int TowerField::cardinality(long level) const {
    Int card = p_;
    for (long i = 0; i < level; ++i) {
        Int next;
        mpz_pow_ui(next.get_mpz_t(), card.get_mpz_t(), static_cast<unsigned long>(f(i)));
        card = next;
    }
    return card;
}

TowerField TowerField::truncated(long levels) const {
    if (levels > this->levels()) throw error("truncated: not enough levels");
    TowerField t = *this;
    t.nodes_.resize(static_cast<size_t>(levels));
    return t;
}

TowerElem TowerField::zero(long level) const {
    TowerElem e;
    e.level = level;
    if (level > 0) {
        e.up.assign(static_cast<size_t>(f(level - 1)), zero(level - 1));
    }
    return e;
}

TowerElem TowerField::one(long level) const { return from_ui(level, 1); }

TowerElem TowerField::from_ui(long level, std::uint64_t v) const {
    if (level == 0) {
        TowerElem e;
        e.level = 0;
        e.c0 = v % pu_;
        return e;
    }
    TowerElem e = zero(level);
    e.up[0] = from_ui(level - 1, v);
    return e;
}

TowerElem TowerField::gen(long level) const {
    if (level < 1 || level > levels()) throw error("gen: level out of range");
    const FFPoly& ps = psi(level - 1);
    if (ps.degree() > 1) {
        TowerElem e = zero(level);
        e.up[1] = one(level - 1);
        return e;
    }
    // psi = y + c: the class of y is -c.
    TowerElem e = zero(level);
    e.up[0] = neg(ps.c[0]);
    return e;
}

TowerElem TowerField::embed(const TowerElem& a, long to_level) const {
    if (a.level == to_level) return a;
    if (a.level > to_level) throw error("embed: cannot lower level");
    TowerElem e = zero(a.level + 1);
    e.up[0] = a;
    return embed(e, to_level);
}

TowerElem TowerField::add(const TowerElem& a, const TowerElem& b) const {
    TowerElem r = a;
    if (a.level != b.level) throw error("ffield add: level mismatch");
    if (a.level == 0) {
        r.c0 = (a.c0 + b.c0) % pu_;
        return r;
    }
    for (size_t i = 0; i < r.up.size(); ++i) r.up[i] = add(a.up[i], b.up[i]);
    return r;
}

TowerElem TowerField::sub(const TowerElem& a, const TowerElem& b) const {
    return add(a, neg(b));
}

TowerElem TowerField::neg(const TowerElem& a) const {
    TowerElem r = a;
    if (a.level == 0) {
        r.c0 = a.c0 == 0 ? 0 : pu_ - a.c0;
        return r;
    }
    for (auto& e : r.up) e = neg(e);
    return r;
}

TowerElem TowerField::mul(const TowerElem& a, const TowerElem& b) const {
    if (a.level != b.level) throw error("ffield mul: level mismatch");
    if (a.level == 0) {
        TowerElem r = a;
        r.c0 = mulmod(a.c0, b.c0, pu_);
        return r;
    }
    long lvl = a.level;
    long fd = f(lvl - 1);
    // convolution of the coefficient vectors, one level down
    std::vector<TowerElem> conv(static_cast<size_t>(2 * fd - 1), zero(lvl - 1));
    for (long i = 0; i < fd; ++i) {
        if (a.up[static_cast<size_t>(i)].is_zero()) continue;
        for (long j = 0; j < fd; ++j) {
            if (b.up[static_cast<size_t>(j)].is_zero()) continue;
            conv[static_cast<size_t>(i + j)] =
                add(conv[static_cast<size_t>(i + j)],
                    mul(a.up[static_cast<size_t>(i)], b.up[static_cast<size_t>(j)]));
        }
    }
    // reduce mod psi_{lvl-1} (monic)
    const FFPoly& ps = psi(lvl - 1);
    for (long k = 2 * fd - 2; k >= fd; --k) {
        TowerElem& top = conv[static_cast<size_t>(k)];
        if (top.is_zero()) continue;
        for (long j = 0; j < fd; ++j)
            conv[static_cast<size_t>(k - fd + j)] =
                sub(conv[static_cast<size_t>(k - fd + j)], mul(top, ps.c[static_cast<size_t>(j)]));
        top = zero(lvl - 1);
    }
    TowerElem r = zero(lvl);
    for (long i = 0; i < fd; ++i) r.up[static_cast<size_t>(i)] = conv[static_cast<size_t>(i)];
    return r;
}

TowerElem TowerField::inv(const TowerElem& a) const {
    if (a.is_zero()) throw error("ffield inv: zero element");
    if (a.level == 0) {
        TowerElem r = a;
        r.c0 = powmod(a.c0, pu_ - 2, pu_);
        return r;
    }
    // extended Euclid on (rep(a), psi) over level-1
    long lvl = a.level;
    FFPoly r0 = psi(lvl - 1);
    FFPoly r1{lvl - 1, a.up};
    r1.trim();
    FFPoly s0 = pzero(lvl - 1);
    FFPoly s1 = pconst(lvl - 1, one(lvl - 1));
    while (true) {
        if (r1.is_zero()) throw error("ffield inv: element not invertible");
        if (r1.degree() == 0) {
            FFPoly s = pmul_elem(s1, inv(r1.c[0]));
            TowerElem out = zero(lvl);
            for (size_t i = 0; i < s.c.size(); ++i) out.up[i] = s.c[i];
            return out;
        }
        FFPoly q, r;
        pdivrem(r0, r1, q, r);
        FFPoly s = psub(s0, pmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
}

TowerElem TowerField::pow(const TowerElem& a, const Int& e) const {
    if (e < 0) return pow(inv(a), Int(-e));
    TowerElem r = one(a.level);
    TowerElem base = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return r;
}

// ---- polynomials over a level ----

FFPoly TowerField::pconst(long level, const TowerElem& a) const {
    FFPoly r{level, {a}};
    r.trim();
    return r;
}

FFPoly TowerField::px(long level) const {
    return FFPoly{level, {zero(level), one(level)}};
}

FFPoly TowerField::padd(const FFPoly& a, const FFPoly& b) const {
    FFPoly r{a.level, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), zero(a.level));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = add(r.c[i], a.c[i]);
        if (i < b.c.size()) r.c[i] = add(r.c[i], b.c[i]);
    }
    r.trim();
    return r;
}

FFPoly TowerField::psub(const FFPoly& a, const FFPoly& b) const { return padd(a, pneg(b)); }

FFPoly TowerField::pneg(const FFPoly& a) const {
    FFPoly r = a;
    for (auto& e : r.c) e = neg(e);
    return r;
}

FFPoly TowerField::pmul(const FFPoly& a, const FFPoly& b) const {
    if (a.is_zero() || b.is_zero()) return pzero(a.level);
    FFPoly r{a.level, {}};
    r.c.assign(a.c.size() + b.c.size() - 1, zero(a.level));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
        }
    }
    r.trim();
    return r;
}

FFPoly TowerField::pmul_elem(const FFPoly& a, const TowerElem& s) const {
    FFPoly r = a;
    for (auto& e : r.c) e = mul(e, s);
    r.trim();
    return r;
}

void TowerField::pdivrem(const FFPoly& num, const FFPoly& den, FFPoly& q, FFPoly& r) const {
    if (den.is_zero()) throw zero_polynomial();
    r = num;
    q = pzero(num.level);
    long dd = den.degree();
    if (num.degree() < dd) return;
    q.c.assign(static_cast<size_t>(num.degree() - dd) + 1, zero(num.level));
    TowerElem ilc = inv(den.lc());
    while (!r.is_zero() && r.degree() >= dd) {
        long k = r.degree() - dd;
        TowerElem coef = mul(r.lc(), ilc);
        q.c[static_cast<size_t>(k)] = coef;
        for (long j = 0; j <= dd; ++j)
            r.c[static_cast<size_t>(k + j)] =
                sub(r.c[static_cast<size_t>(k + j)], mul(coef, den.c[static_cast<size_t>(j)]));
        r.trim();
    }
    q.trim();
}

FFPoly TowerField::pmod(const FFPoly& num, const FFPoly& den) const {
    FFPoly q, r;
    pdivrem(num, den, q, r);
    return r;
}

FFPoly TowerField::pmonic(const FFPoly& a) const {
    if (a.is_zero()) return a;
    return pmul_elem(a, inv(a.lc()));
}

FFPoly TowerField::pgcd(FFPoly a, FFPoly b) const {
    while (!b.is_zero()) {
        FFPoly r = pmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return pmonic(a);
}

FFPoly TowerField::pderiv(const FFPoly& a) const {
    if (a.degree() < 1) return pzero(a.level);
    FFPoly r{a.level, {}};
    r.c.resize(a.c.size() - 1, zero(a.level));
    for (size_t i = 1; i < a.c.size(); ++i) {
        TowerElem k = from_ui(a.level, static_cast<std::uint64_t>(i % pu_));
        r.c[i - 1] = mul(a.c[i], k);
    }
    r.trim();
    return r;
}

FFPoly TowerField::ppowmod(const FFPoly& base, const Int& e, const FFPoly& m) const {
    FFPoly r = pconst(base.level, one(base.level));
    FFPoly b = pmod(base, m);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = pmod(pmul(r, b), m);
        k >>= 1;
        if (k > 0) b = pmod(pmul(b, b), m);
    }
    return r;
}

TowerElem TowerField::peval(const FFPoly& a, const TowerElem& x) const {
    TowerElem r = zero(a.level);
    for (size_t i = a.c.size(); i-- > 0;) r = add(mul(r, x), a.c[i]);
    return r;
}

// ---- tower extension ----

TowerField extend_tower(const TowerField& tower, const FFPoly& psi) {
    if (psi.level != tower.levels()) throw error("extend_tower: psi must live at the top level");
    if (psi.is_zero() || psi.degree() < 1 || !(psi.lc() == tower.one(psi.level)))
        throw not_monic("extend_tower: psi must be monic of degree >= 1");
    if (tower.levels() > 0 && psi.degree() == 1 && psi.c[0].is_zero()) throw psi_is_y();
    auto factors = ff_factorize(tower, psi);
    if (factors.size() != 1 || factors[0].second != 1) throw reducible_psi();

    TowerField ext = tower;
    auto node = std::make_shared<TowerField::Node>();
    node->psi = psi;
    node->f = psi.degree();
    Int card;
    mpz_pow_ui(card.get_mpz_t(), tower.cardinality(tower.levels()).get_mpz_t(),
               static_cast<unsigned long>(psi.degree()));
    node->card = card;
    ext.nodes_.push_back(std::move(node));
    return ext;
}

// ---- factorization ----

namespace {

struct FFRng {
    std::mt19937_64 eng;
    explicit FFRng(std::uint64_t s) : eng(s) {}
    std::uint64_t next() { return eng(); }
};

TowerElem random_elem(const TowerField& F, long level, FFRng& rng) {
    if (level == 0) {
        TowerElem e;
        e.level = 0;
        e.c0 = rng.next() % F.p_ui();
        return e;
    }
    TowerElem e = F.zero(level);
    for (auto& u : e.up) u = random_elem(F, level - 1, rng);
    return e;
}

// p-th root of an element: Frobenius inverse, a^(q/p) in a field of size q.
TowerElem pth_root(const TowerField& F, long level, const TowerElem& a) {
    Int q = F.cardinality(level);
    Int e = q / F.p();
    return F.pow(a, e);
}

// For f with f' = 0 (so f = g(x^p)), return g.
FFPoly pth_root_poly(const TowerField& F, const FFPoly& f) {
    std::uint64_t p = F.p_ui();
    FFPoly g{f.level, {}};
    g.c.resize(f.c.size() / static_cast<size_t>(p) + 1, F.zero(f.level));
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        if (i % p != 0) throw invariant_violation("pth_root_poly: nonzero coefficient off stride");
        g.c[i / p] = pth_root(F, f.level, f.c[i]);
    }
    g.trim();
    return g;
}

void squarefree_decomp(const TowerField& F, const FFPoly& f, long mult_scale,
                       std::vector<std::pair<FFPoly, long>>& out) {
    if (f.degree() < 1) return;
    FFPoly fp = F.pderiv(f);
    if (fp.is_zero()) {
        squarefree_decomp(F, pth_root_poly(F, f), mult_scale * static_cast<long>(F.p_ui()), out);
        return;
    }
    FFPoly c = F.pgcd(f, fp);
    FFPoly w, dummy;
    F.pdivrem(f, c, w, dummy);
    long i = 1;
    while (w.degree() > 0) {
        FFPoly y = F.pgcd(w, c);
        FFPoly z, d2;
        F.pdivrem(w, y, z, d2);
        if (z.degree() > 0) out.emplace_back(F.pmonic(z), i * mult_scale);
        FFPoly cq, d3;
        F.pdivrem(c, y, cq, d3);
        c = std::move(cq);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0)
        squarefree_decomp(F, pth_root_poly(F, c), mult_scale * static_cast<long>(F.p_ui()), out);
}

// Distinct-degree split of a monic squarefree polynomial.
std::vector<std::pair<FFPoly, long>> ddf(const TowerField& F, FFPoly v) {
    std::vector<std::pair<FFPoly, long>> out;
    Int q = F.cardinality(v.level);
    FFPoly h = F.px(v.level);
    long d = 0;
    while (v.degree() > 0) {
        ++d;
        if (2 * d > v.degree()) {
            out.emplace_back(v, v.degree());
            break;
        }
        h = F.ppowmod(h, q, v);
        FFPoly g = F.pgcd(F.psub(h, F.px(v.level)), v);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            FFPoly w, r;
            F.pdivrem(v, g, w, r);
            v = std::move(w);
            h = F.pmod(h, v);
        }
    }
    return out;
}

// Equal-degree split (Cantor-Zassenhaus; trace construction in characteristic 2).
void edf(const TowerField& F, const FFPoly& u, long d, FFRng& rng, std::vector<FFPoly>& out) {
    if (u.degree() == d) {
        out.push_back(F.pmonic(u));
        return;
    }
    Int q = F.cardinality(u.level);
    FFPoly g;
    for (;;) {
        FFPoly r{u.level, {}};
        r.c.resize(static_cast<size_t>(u.degree()), F.zero(u.level));
        for (auto& e : r.c) e = random_elem(F, u.level, rng);
        r.trim();
        if (r.is_zero()) continue;
        if (F.p_ui() == 2) {
            // trace map over F_2: sum of r^(2^i), i < log2(q^d)
            unsigned long bits = static_cast<unsigned long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 1;
            unsigned long total = bits * static_cast<unsigned long>(d);
            FFPoly t = F.pmod(r, u);
            FFPoly s = t;
            for (unsigned long i = 1; i < total; ++i) {
                t = F.pmod(F.pmul(t, t), u);
                s = F.padd(s, t);
            }
            g = F.pgcd(s, u);
        } else {
            Int e;
            mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            FFPoly s = F.ppowmod(r, e, u);
            s = F.psub(s, F.pconst(u.level, F.one(u.level)));
            g = F.pgcd(s, u);
        }
        if (g.degree() > 0 && g.degree() < u.degree()) break;
    }
    FFPoly w, rr;
    F.pdivrem(u, g, w, rr);
    edf(F, g, d, rng, out);
    edf(F, w, d, rng, out);
}

}  // namespace

std::vector<std::pair<FFPoly, long>> ff_factorize(const TowerField& tower, const FFPoly& poly) {
    if (poly.is_zero()) throw zero_polynomial();
    std::uint64_t seed =
        fnv1a(poly.str() + "&" + tower.p().get_str() + "@" + std::to_string(poly.level),
              Config::get().seed);
    FFRng rng(seed);

    std::vector<std::pair<FFPoly, long>> sqf;
    squarefree_decomp(tower, tower.pmonic(poly), 1, sqf);

    std::vector<std::pair<FFPoly, long>> out;
    for (const auto& [g, mult] : sqf) {
        for (const auto& [h, d] : ddf(tower, g)) {
            std::vector<FFPoly> irr;
            edf(tower, h, d, rng, irr);
            for (auto& w : irr) out.emplace_back(std::move(w), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int c = cmp(a.first, b.first);
        return c < 0;
    });
    return out;
}

long ff_ord(const TowerField& tower, const FFPoly& poly, const FFPoly& psi) {
    if (poly.is_zero()) throw zero_polynomial();
    long k = 0;
    FFPoly cur = poly;
    while (cur.degree() >= psi.degree()) {
        FFPoly q, r;
        tower.pdivrem(cur, psi, q, r);
        if (!r.is_zero()) break;
        ++k;
        cur = std::move(q);
    }
    return k;
}

}  // namespace omvals
