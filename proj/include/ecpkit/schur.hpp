#pragma once

#include <string>

#include "ecpkit/code.hpp"

namespace ecpkit {

/// Code spanned by all component-wise products of generator rows of A and B.
LinearCode schur_product(const LinearCode& a, const LinearCode& b);

/// True iff A * B is orthogonal to C, i.e. sum_j a_j b_j c_j = 0 for all
/// generator rows. Equivalent to A * B being a subcode of the dual of C.
bool product_in_dual(const LinearCode& a, const LinearCode& b, const LinearCode& c);

enum class BoundCheck { Holds, Fails, NotApplicable };

std::string to_string(BoundCheck b);

struct ProductReport {
    std::size_t n = 0;
    std::size_t kA = 0;
    std::size_t kB = 0;
    std::size_t k_prod = 0;
    std::size_t d_prod = 0;
    std::size_t psb = 0;  // max{1, n - kA - kB + 2}
    bool is_pmds = false;
    /// k(A*B) >= min{n, kA + kB - 1}; only evaluated when both codes have
    /// full support and one of them is MDS.
    BoundCheck fullsupp_bound = BoundCheck::NotApplicable;

    std::string to_text() const;
    std::string to_record() const;
};

/// Throws InvariantViolated if the product ever beats the product Singleton bound.
ProductReport product_report(const LinearCode& a, const LinearCode& b, DistanceOptions opts = {});
ProductReport product_report(const LinearCode& a, const LinearCode& b, const LinearCode& prod,
                             DistanceOptions opts = {});

/// For MDS A and B: false when k(A*B) != kA + kB - 1; otherwise checks that
/// A*B is MDS (InvariantViolated if not) and returns true.
bool mds_product_check(const LinearCode& a, const LinearCode& b, DistanceOptions opts = {});

/// With A*B inside the dual of C, d(A dual) > a > 0 and d(B dual) > b > 0,
/// checks d(C) >= a + b. Throws PreconditionFailed when the hypotheses fail
/// and InvariantViolated when the bound fails.
bool dual_distance_bound_check(const LinearCode& a, const LinearCode& b, const LinearCode& c, std::size_t a_bound,
                               std::size_t b_bound, DistanceOptions opts = {});

/// Minimum distance of the dual, or n + 1 when the code is the full space
/// (the zero dual has no nonzero words).
std::size_t dual_distance(const LinearCode& c, DistanceOptions opts = {});

}  // namespace ecpkit
