#pragma once

#include <stdexcept>
#include <string>

namespace omvals {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_monic : error {
    not_monic() : error("polynomial is not monic") {}
    explicit not_monic(const std::string& what) : error(what) {}
};

struct zero_polynomial : error {
    zero_polynomial() : error("zero polynomial") {}
};

struct zero_leading_coefficient : error {
    zero_leading_coefficient() : error("leading coefficient is zero") {}
};

struct reducible_psi : error {
    reducible_psi() : error("defining polynomial is reducible") {}
};

struct psi_is_y : error {
    psi_is_y() : error("residual factor y is not allowed above level 0") {}
};

struct chain_degree_mismatch : error {
    chain_degree_mismatch() : error("expansion chain degrees are not strictly increasing divisors") {}
};

struct incomplete_type : error {
    incomplete_type() : error("operation requires a complete type") {}
};

struct param_out_of_range : error {
    explicit param_out_of_range(const std::string& what) : error(what) {}
};

// A p-adic valuation decision hit the working-precision ceiling.  Drivers
// catch this, double the precision and redo the affected computation.
struct insufficient_precision : error {
    insufficient_precision() : error("insufficient working precision") {}
};

// Escalation ran past OMVALS_MAX_PRECISION; gives a diagnostic instead of looping.
struct precision_limit : error {
    explicit precision_limit(const std::string& what) : error(what) {}
};

// An internal identity failed; signals an implementation bug, never a result.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& what) : error(what) {}
};

}  // namespace omvals
