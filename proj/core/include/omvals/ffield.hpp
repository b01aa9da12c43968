#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "omvals/intops.hpp"

namespace omvals {

// Element of a tower level.  Level 0 is the prime field; an element of level
// k > 0 is a vector of exactly f_{k-1} coefficients one level down (the class
// of a polynomial in z_{k-1}).  Representations are always fully reduced and
// zero-padded, so equality is representation equality.
struct TowerElem {
    long level = 0;
    std::uint64_t c0 = 0;
    std::vector<TowerElem> up;

    bool is_zero() const {
        if (level == 0) return c0 == 0;
        for (const auto& e : up)
            if (!e.is_zero()) return false;
        return true;
    }
    bool operator==(const TowerElem& o) const = default;

    std::string str() const;
};

// -1, 0, 1 lexicographically on the coefficient chains (total order used for
// canonical sorting of factorizations).
int cmp(const TowerElem& a, const TowerElem& b);

// Dense polynomial over a tower level, ascending coefficients, trimmed.
struct FFPoly {
    long level = 0;
    std::vector<TowerElem> c;

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const TowerElem& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool operator==(const FFPoly& o) const = default;

    std::string str() const;
};

int cmp(const FFPoly& a, const FFPoly& b);  // by degree, then lex from the top

// The residue tower F_p = F_0 c F_1 c ... with F_{i+1} = F_i[y]/(psi_i).
// Value-semantic; extensions share their lower levels.
class TowerField {
  public:
    explicit TowerField(const Int& p);

    const Int& p() const { return p_; }
    std::uint64_t p_ui() const { return pu_; }
    // Number of extension steps; the top field is F_{levels()}.
    long levels() const { return static_cast<long>(nodes_.size()); }
    // deg psi_{i}, for 0 <= i < levels().
    long f(long i) const { return nodes_[static_cast<size_t>(i)]->f; }
    const FFPoly& psi(long i) const { return nodes_[static_cast<size_t>(i)]->psi; }
    // Cardinality of the field at `level` (0 <= level <= levels()).
    Int cardinality(long level) const;
    // Tower restricted to its first `levels` extension steps.
    TowerField truncated(long levels) const;

    // ---- element operations (inputs must live at the same level) ----
    TowerElem zero(long level) const;
    TowerElem one(long level) const;
    TowerElem from_ui(long level, std::uint64_t v) const;
    // z_{level-1}: the class of y generating F_level over F_{level-1}.
    TowerElem gen(long level) const;
    // Constant embedding of an element one level up.
    TowerElem embed(const TowerElem& a, long to_level) const;
    TowerElem add(const TowerElem& a, const TowerElem& b) const;
    TowerElem sub(const TowerElem& a, const TowerElem& b) const;
    TowerElem neg(const TowerElem& a) const;
    TowerElem mul(const TowerElem& a, const TowerElem& b) const;
    TowerElem inv(const TowerElem& a) const;
    TowerElem pow(const TowerElem& a, const Int& e) const;

    // ---- polynomial operations over a level ----
    FFPoly pzero(long level) const { return FFPoly{level, {}}; }
    FFPoly pconst(long level, const TowerElem& a) const;
    FFPoly px(long level) const;
    FFPoly padd(const FFPoly& a, const FFPoly& b) const;
    FFPoly psub(const FFPoly& a, const FFPoly& b) const;
    FFPoly pneg(const FFPoly& a) const;
    FFPoly pmul(const FFPoly& a, const FFPoly& b) const;
    FFPoly pmul_elem(const FFPoly& a, const TowerElem& s) const;
    void pdivrem(const FFPoly& num, const FFPoly& den, FFPoly& q, FFPoly& r) const;
    FFPoly pmod(const FFPoly& num, const FFPoly& den) const;
    FFPoly pmonic(const FFPoly& a) const;
    FFPoly pgcd(FFPoly a, FFPoly b) const;  // monic gcd
    FFPoly pderiv(const FFPoly& a) const;
    FFPoly ppowmod(const FFPoly& base, const Int& e, const FFPoly& m) const;
    TowerElem peval(const FFPoly& a, const TowerElem& x) const;

  private:
    friend TowerField extend_tower(const TowerField& tower, const FFPoly& psi);

    struct Node {
        FFPoly psi;
        long f;
        Int card;
    };

    Int p_;
    std::uint64_t pu_;
    std::vector<std::shared_ptr<const Node>> nodes_;
};

// New tower with one more level; verifies monicity and irreducibility of psi.
TowerField extend_tower(const TowerField& tower, const FFPoly& psi);

// Full factorization into monic irreducibles with multiplicities, canonically
// sorted.  Deterministic: the equal-degree splitting PRNG is seeded from a
// hash of the input and the global seed.
std::vector<std::pair<FFPoly, long>> ff_factorize(const TowerField& tower, const FFPoly& poly);

// Largest k with psi^k | poly.
long ff_ord(const TowerField& tower, const FFPoly& poly, const FFPoly& psi);

}  // namespace omvals
