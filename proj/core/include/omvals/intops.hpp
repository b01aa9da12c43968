#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "omvals/errors.hpp"

namespace omvals {

using Int = mpz_class;
using Rat = mpq_class;

// Element of Z_{>=0} U {oo}.  Infinity absorbs addition and wins comparisons.
class Val {
  public:
    static constexpr long kInf = std::numeric_limits<long>::max();

    Val() : v_(0) {}
    explicit Val(long v) : v_(v) {}
    static Val inf() { return Val(kInf); }

    bool is_inf() const { return v_ == kInf; }
    long get() const {
        if (is_inf()) throw error("Val: finite value expected, got infinity");
        return v_;
    }
    long get_or(long fallback) const { return is_inf() ? fallback : v_; }

    Val operator+(const Val& o) const {
        if (is_inf() || o.is_inf()) return inf();
        return Val(v_ + o.v_);
    }
    Val operator+(long k) const { return is_inf() ? inf() : Val(v_ + k); }
    Val operator*(long k) const { return is_inf() ? inf() : Val(v_ * k); }
    friend auto operator<=>(const Val& a, const Val& b) = default;

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

  private:
    long v_;
};

// v_p(n): largest k with p^k | n; infinity for n = 0.
Val vp_int(const Int& p, const Int& n);

// Exact p-adic valuation of a non-zero rational.
long vp_rat(const Int& p, const Rat& q);

Int pow_int(const Int& base, unsigned long e);

// Deterministic Miller-Rabin for 64-bit inputs, fixed-base probabilistic above.
bool is_prime(const Int& n);

// Floor/exact helpers used by lattice counts: floor(a/b) for b > 0.
long floor_div(long a, long b);

// Hash bytes of the canonical decimal string; used for reproducible seeding.
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed);

}  // namespace omvals
