#pragma once

#include <cstddef>
#include <optional>

#include "ecpkit/code.hpp"

namespace ecpkit {

/// Evaluation data for GRS_k(alpha, v). An empty v means all ones.
struct GrsSpec {
    FieldSpec field;
    Vec alpha;
    Vec v;
    std::size_t k = 0;

    /// Throws InvalidSpec (repeated or invalid points, zero multiplier, length
    /// mismatch) or BadK (k outside 1..n).
    void validate() const;
    Vec multiplier() const;
};

/// Twisted GRS data: the basis monomial x^h is replaced by x^h + eta x^(k-1+t).
struct TgrsSpec {
    GrsSpec grs;
    Felt eta;
    std::size_t t = 1;
    std::size_t h = 0;

    void validate() const;
    /// The (+) shape, t = 1 and h = k - 1.
    bool is_plus() const noexcept { return t == 1 && h + 1 == grs.k; }
    static TgrsSpec plus(GrsSpec grs, Felt eta);
};

LinearCode grs(const GrsSpec& spec);
LinearCode tgrs(const TgrsSpec& spec);

/// Rows of the generator before reduction, in basis order (row i evaluates
/// the i-th basis polynomial).
Mat grs_rows(const GrsSpec& spec);
Mat tgrs_rows(const TgrsSpec& spec);

/// Sorted set of all sums of k entries of alpha at distinct positions.
/// Subset enumeration while C(n, k) <= 2^20, the sum-set recurrence beyond.
Vec s_k_plus(const FieldSpec& f, const Vec& alpha, std::size_t k);
Vec s_k_plus_enumerate(const FieldSpec& f, const Vec& alpha, std::size_t k);
Vec s_k_plus_dp(const FieldSpec& f, const Vec& alpha, std::size_t k);

enum class PlusClass { MDS, NMDS };

/// Predicts the class of a (+)-TGRS code: NMDS iff -1/eta is a k-subset sum.
PlusClass tgrs_plus_class(const TgrsSpec& spec);

/// True iff C equals GRS_k(alpha, v) for the given spec.
bool grs_equals(const LinearCode& c, const GrsSpec& spec);

/// Finds v with C = GRS_k(alpha, v), k = dim C, if one exists. For the full
/// space the answer is the all-ones vector.
std::optional<Vec> grs_multiplier(const LinearCode& c, const Vec& alpha);

/// Binomial coefficient saturated at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace ecpkit
