#include "omvals/config.hpp"

#include <cstdlib>
#include <string>

namespace omvals {

static long env_long(const char* name, long dflt) {
    const char* s = std::getenv(name);
    if (!s || !*s) return dflt;
    return std::stol(s);
}

const Config& Config::get() {
    static Config cfg = [] {
        Config c;
        if (const char* s = std::getenv("OMVALS_SEED"); s && *s)
            c.seed = std::stoull(s);
        c.start_precision = env_long("OMVALS_START_PRECISION", 30);
        c.max_precision = env_long("OMVALS_MAX_PRECISION", 1L << 22);
        if (c.start_precision < 1) c.start_precision = 1;
        return c;
    }();
    return cfg;
}

PrecCtx::PrecCtx(Int p, long start_nu) : p_(std::move(p)) {
    nu_ = start_nu > 0 ? start_nu : Config::get().start_precision;
    max_nu_ = Config::get().max_precision;
    if (nu_ > max_nu_) nu_ = max_nu_;
    pnu_ = pow_int(p_, static_cast<unsigned long>(nu_));
}

void PrecCtx::escalate(long hint) {
    long next = nu_ * 2;
    while (next < hint) next *= 2;
    if (next > max_nu_ || nu_ >= max_nu_)
        throw precision_limit("working precision exceeded OMVALS_MAX_PRECISION=" +
                              std::to_string(max_nu_) + " (p=" + p_.get_str() + ")");
    nu_ = next;
    pnu_ = pow_int(p_, static_cast<unsigned long>(nu_));
}

}  // namespace omvals
