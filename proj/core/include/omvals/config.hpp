#pragma once

#include <cstdint>

#include "omvals/intops.hpp"

namespace omvals {

// Process-wide knobs, read once from the environment:
//   OMVALS_SEED             global seed for the reproducible factorization PRNG
//   OMVALS_START_PRECISION  initial working precision nu (default 30)
//   OMVALS_MAX_PRECISION    escalation cap; exceeding it aborts with a diagnostic
struct Config {
    std::uint64_t seed = 0;
    long start_precision = 30;
    long max_precision = 1L << 22;

    static const Config& get();
};

// Working precision for one engine run.  Coefficients are kept as canonical
// representatives in [0, p^nu); any valuation decision that hits the ceiling
// throws insufficient_precision and the affected computation is redone at a
// doubled nu.
class PrecCtx {
  public:
    PrecCtx(Int p, long start_nu = 0);

    const Int& p() const { return p_; }
    long nu() const { return nu_; }
    const Int& pnu() const { return pnu_; }

    // Doubles nu (at least up to `hint` if given); throws precision_limit past the cap.
    void escalate(long hint = 0);

  private:
    Int p_;
    long nu_;
    Int pnu_;
    long max_nu_;
};

// Retry `f()` under escalating precision.
template <class F>
auto with_precision(PrecCtx& ctx, F&& f) {
    for (;;) {
        try {
            return f();
        } catch (const insufficient_precision&) {
            ctx.escalate();
        }
    }
}

}  // namespace omvals
