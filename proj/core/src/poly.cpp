#include "omvals/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "omvals/errors.hpp"

namespace omvals {

static const Int kZero = 0;

const Int& PIntPoly::lc() const {
    if (is_zero()) throw zero_polynomial();
    return c_.back();
}

const Int& PIntPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

long take_prec(const PIntPoly& a, const PIntPoly& b, const Mod* mod) {
    long p = PIntPoly::kExact;
    auto merge = [&p](long q) {
        if (q == PIntPoly::kExact) return;
        p = (p == PIntPoly::kExact) ? q : std::min(p, q);
    };
    merge(a.precision());
    merge(b.precision());
    if (mod) merge(mod->nu);
    return p;
}

static void reduce_coeff(Int& c, const Mod* mod) {
    if (mod) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), mod->pnu.get_mpz_t());
}

PIntPoly poly_add(const PIntPoly& a, const PIntPoly& b, const Mod* mod) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
        reduce_coeff(c[i], mod);
    }
    return PIntPoly(std::move(c), take_prec(a, b, mod));
}

PIntPoly poly_sub(const PIntPoly& a, const PIntPoly& b, const Mod* mod) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(static_cast<long>(i)) - b.coeff(static_cast<long>(i));
        reduce_coeff(c[i], mod);
    }
    return PIntPoly(std::move(c), take_prec(a, b, mod));
}

PIntPoly poly_neg(const PIntPoly& a, const Mod* mod) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) {
        x = -x;
        reduce_coeff(x, mod);
    }
    return PIntPoly(std::move(c), take_prec(a, a, mod));
}

PIntPoly poly_mul(const PIntPoly& a, const PIntPoly& b, const Mod* mod) {
    if (a.is_zero() || b.is_zero()) return PIntPoly();
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const Int& ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    for (auto& x : c) reduce_coeff(x, mod);
    return PIntPoly(std::move(c), take_prec(a, b, mod));
}

PIntPoly poly_mul_int(const PIntPoly& a, const Int& k, const Mod* mod) {
    if (k == 0) return PIntPoly();
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) {
        x *= k;
        reduce_coeff(x, mod);
    }
    return PIntPoly(std::move(c), take_prec(a, a, mod));
}

PIntPoly poly_pow(const PIntPoly& a, unsigned long e, const Mod* mod) {
    PIntPoly r = PIntPoly::constant(1);
    PIntPoly base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base, mod);
        e >>= 1;
        if (e) base = poly_mul(base, base, mod);
    }
    return r;
}

PIntPoly poly_derivative(const PIntPoly& a) {
    if (a.degree() < 1) return PIntPoly();
    std::vector<Int> c(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = a.coeffs()[i] * static_cast<long>(i);
    return PIntPoly(std::move(c), a.precision());
}

Int poly_eval(const PIntPoly& a, const Int& x) {
    Int r = 0;
    for (long i = a.degree(); i >= 0; --i) {
        r *= x;
        r += a.coeff(i);
    }
    return r;
}

PIntPoly poly_shift_x(const PIntPoly& a, const Int& t) {
    if (a.is_zero()) return a;
    std::vector<Int> r;  // running result, ascending
    for (long i = a.degree(); i >= 0; --i) {
        // r <- r*(x+t) + a_i
        std::vector<Int> nxt(r.size() + 1, 0);
        for (size_t j = 0; j < r.size(); ++j) {
            nxt[j + 1] += r[j];
            mpz_addmul(nxt[j].get_mpz_t(), r[j].get_mpz_t(), t.get_mpz_t());
        }
        if (nxt.empty()) nxt.emplace_back(0);
        nxt[0] += a.coeff(i);
        r = std::move(nxt);
    }
    return PIntPoly(std::move(r), a.precision());
}

void divrem_monic(const PIntPoly& num, const PIntPoly& den, PIntPoly& q, PIntPoly& r,
                  const Mod* mod) {
    if (den.is_zero() || !den.is_monic()) throw not_monic("divrem_monic: divisor must be monic");
    long m = den.degree();
    long n = num.degree();
    long prec = take_prec(num, den, mod);
    if (n < m) {
        q = PIntPoly();
        r = num;
        if (mod) {
            std::vector<Int> c(r.coeffs());
            for (auto& x : c) reduce_coeff(x, mod);
            r = PIntPoly(std::move(c), prec);
        }
        return;
    }
    std::vector<Int> w(num.coeffs());
    for (long i = n - m; i >= 0; --i) {
        Int& qi = w[static_cast<size_t>(i + m)];
        reduce_coeff(qi, mod);
        if (qi == 0) continue;
        for (long j = 0; j < m; ++j)
            mpz_submul(w[static_cast<size_t>(i + j)].get_mpz_t(), qi.get_mpz_t(),
                       den.coeff(j).get_mpz_t());
    }
    std::vector<Int> rc(w.begin(), w.begin() + m);
    for (auto& x : rc) reduce_coeff(x, mod);
    std::vector<Int> qc(w.begin() + m, w.end());
    r = PIntPoly(std::move(rc), prec);
    q = PIntPoly(std::move(qc), prec);
}

ExpansionResult phi_expansion(const PIntPoly& g, const PIntPoly& phi, std::optional<long> count,
                              const Mod* mod) {
    if (phi.is_zero() || !phi.is_monic() || phi.degree() < 1)
        throw not_monic("phi_expansion: phi must be monic of degree >= 1");
    ExpansionResult res;
    res.phi = phi;
    PIntPoly cur = g;
    long limit = count ? *count : std::numeric_limits<long>::max();
    for (long s = 0; s <= limit; ++s) {
        if (cur.is_zero()) {
            if (count) {
                while (s++ <= limit) res.coeffs.emplace_back();
            }
            break;
        }
        PIntPoly q, r;
        divrem_monic(cur, phi, q, r, mod);
        res.coeffs.push_back(std::move(r));
        cur = std::move(q);
    }
    return res;
}

PIntPoly ExpansionResult::reconstruct() const {
    PIntPoly acc;
    for (long s = static_cast<long>(coeffs.size()) - 1; s >= 0; --s)
        acc = poly_add(poly_mul(acc, phi), coeffs[static_cast<size_t>(s)]);
    return acc;
}

MultiadicExpansion multiadic_expansion(const PIntPoly& g, const std::vector<PIntPoly>& chain) {
    for (size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].degree() < 1 || !chain[i].is_monic())
            throw not_monic("multiadic_expansion: chain entries must be monic, degree >= 1");
        if (i > 0 && (chain[i].degree() <= chain[i - 1].degree() ||
                      chain[i].degree() % chain[i - 1].degree() != 0))
            throw chain_degree_mismatch();
    }
    MultiadicExpansion out;
    out.chain = chain;
    if (chain.empty()) {
        if (!g.is_zero()) out.terms.push_back({{}, g});
        return out;
    }
    // Expand by the top of the chain and recurse on the coefficients.
    struct Rec {
        static void go(const PIntPoly& h, const std::vector<PIntPoly>& chain, size_t lvl,
                       std::vector<long>& exps, MultiadicExpansion& out) {
            if (lvl == 0) {
                if (!h.is_zero()) {
                    MultiadicTerm t;
                    t.exps = exps;
                    std::reverse(t.exps.begin(), t.exps.end());  // stored top-down, want j_1..j_r
                    t.c = h;
                    out.terms.push_back(std::move(t));
                }
                return;
            }
            auto exp = phi_expansion(h, chain[lvl - 1]);
            for (size_t s = 0; s < exp.coeffs.size(); ++s) {
                if (exp.coeffs[s].is_zero()) continue;
                exps.push_back(static_cast<long>(s));
                go(exp.coeffs[s], chain, lvl - 1, exps, out);
                exps.pop_back();
            }
        }
    };
    std::vector<long> exps;
    Rec::go(g, chain, chain.size(), exps, out);
    return out;
}

PIntPoly MultiadicExpansion::reconstruct() const {
    PIntPoly acc;
    for (const auto& t : terms) {
        PIntPoly term = t.c;
        for (size_t i = 0; i < chain.size(); ++i)
            if (t.exps[i] > 0)
                term = poly_mul(term, poly_pow(chain[i], static_cast<unsigned long>(t.exps[i])));
        acc = poly_add(acc, term);
    }
    return acc;
}

PIntPoly reduce_mod_power(const PIntPoly& g, const Int& p, long m) {
    if (m < 1) throw error("reduce_mod_power: m >= 1 required");
    Int pm = pow_int(p, static_cast<unsigned long>(m));
    std::vector<Int> c(g.coeffs());
    for (auto& x : c) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pm.get_mpz_t());
    long prec = g.is_exact() ? m : std::min(g.precision(), m);
    return PIntPoly(std::move(c), prec);
}

Int poly_content(const PIntPoly& g) {
    Int c = 0;
    for (const auto& x : g.coeffs()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

// ---- exact gcd over Z (subresultant PRS on primitive parts) ----

static PIntPoly primitive_part(const PIntPoly& g) {
    if (g.is_zero()) return g;
    Int c = poly_content(g);
    if (g.lc() < 0) c = -c;
    std::vector<Int> v(g.coeffs());
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return PIntPoly(std::move(v));
}

// prem(a, b): pseudo-remainder of a by b, lc(b)^(deg a - deg b + 1) * a mod b.
static PIntPoly pseudo_rem(PIntPoly a, const PIntPoly& b) {
    long db = b.degree();
    const Int& lb = b.lc();
    while (!a.is_zero() && a.degree() >= db) {
        long k = a.degree() - db;
        Int la = a.lc();
        std::vector<Int> c(a.coeffs());
        for (auto& x : c) x *= lb;
        for (long j = 0; j <= db; ++j)
            mpz_submul(c[static_cast<size_t>(j + k)].get_mpz_t(), la.get_mpz_t(),
                       b.coeff(j).get_mpz_t());
        a = PIntPoly(std::move(c));
        if (a.degree() == db + k) throw invariant_violation("pseudo_rem: degree did not drop");
    }
    return a;
}

PIntPoly poly_gcd_z(PIntPoly a, PIntPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PIntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

// ---- squarefreeness over Q, with a cheap modular certificate ----

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> reduce_mod_q(const PIntPoly& g, std::uint64_t q) {
    std::vector<std::uint64_t> v(g.coeffs().size());
    Int t;
    Int qi = static_cast<unsigned long>(q);
    for (size_t i = 0; i < v.size(); ++i) {
        mpz_mod(t.get_mpz_t(), g.coeffs()[i].get_mpz_t(), qi.get_mpz_t());
        v[i] = mpz_get_ui(t.get_mpz_t());
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

long gcd_deg_mod_q(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t q) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b over F_q
        std::uint64_t inv = powmod_u64(b.back(), q - 2, q);
        while (a.size() >= b.size()) {
            std::uint64_t c = mulmod_u64(a.back(), inv, q);
            size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) {
                std::uint64_t s = mulmod_u64(c, b[j], q);
                a[off + j] = (a[off + j] + q - s) % q;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<long>(a.size()) - 1;
}

}  // namespace

bool squarefree_over_q(const PIntPoly& g) {
    if (g.is_zero()) return false;
    if (g.degree() <= 1) return true;
    PIntPoly d = poly_derivative(g);
    static const std::uint64_t screen[] = {1000000007ull, 1000000009ull, 998244353ull};
    for (std::uint64_t q : screen) {
        if (mpz_divisible_ui_p(g.lc().get_mpz_t(), static_cast<unsigned long>(q))) continue;
        if (gcd_deg_mod_q(reduce_mod_q(g, q), reduce_mod_q(d, q), q) == 0) return true;
    }
    return poly_gcd_z(g, d).degree() == 0;
}

// ---- text grammar ----

PIntPoly parse_poly(const std::string& text) {
    std::vector<Int> coeffs;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto add_term = [&](const Int& c, long k) {
        if (k < 0) throw error("parse_poly: negative exponent");
        if (coeffs.size() <= static_cast<size_t>(k)) coeffs.resize(static_cast<size_t>(k) + 1, 0);
        coeffs[static_cast<size_t>(k)] += c;
    };
    skip_ws();
    if (i >= text.size()) throw error("parse_poly: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (first) throw error("parse_poly: empty input");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw error("parse_poly: expected '+' or '-' between terms");
        }
        first = false;
        Int c = 1;
        bool have_num = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            c = Int(text.substr(i, j - i));
            i = j;
            have_num = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
                if (i >= text.size() || text[i] != 'x') throw error("parse_poly: expected x after '*'");
            }
        }
        long k = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            k = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw error("parse_poly: expected exponent digits after '^'");
                k = std::stol(text.substr(i, j - i));
                i = j;
            }
        } else if (!have_num) {
            throw error("parse_poly: expected coefficient or x");
        }
        add_term(sign * c, k);
    }
    return PIntPoly(std::move(coeffs));
}

std::string PIntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (k == 0) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += "*";
            }
            out += "x";
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

}  // namespace omvals
