#include "omvals/intops.hpp"

namespace omvals {

Val vp_int(const Int& p, const Int& n) {
    if (n == 0) return Val::inf();
    if (p <= 1) throw error("vp_int: p must be >= 2");
    Int rest;
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return Val(static_cast<long>(k));
}

long vp_rat(const Int& p, const Rat& q) {
    if (q == 0) throw error("vp_rat: zero has no finite valuation");
    long num = vp_int(p, q.get_num()).get();
    long den = vp_int(p, q.get_den()).get();
    return num - den;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // mpz_probab_prime_p is deterministic (BPSW + trial) for anything that
    // fits in 64 bits and uses the requested number of extra rounds above.
    int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
    return r != 0;
}

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace omvals
