#pragma once

// Exhaustive search kernels. Each one has an OpenMP-parallel version used by
// the library and a plain serial reference kept for tests and benchmarks.
// Both versions return identical results; parallel merges are order-independent.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ecpkit/linalg.hpp"

namespace ecpkit::kernels {

/// Closest codeword m * gen to y. Messages are indexed with m_0 as the most
/// significant base-q digit; `message_index` is the smallest index attaining
/// the minimum and `count_at_min` how many codewords attain it.
struct NearestHit {
    std::uint64_t message_index = 0;
    std::size_t distance = 0;
    std::uint64_t count_at_min = 0;
};

NearestHit nearest_scan(const Mat& gen, std::span<const Felt> y);
NearestHit nearest_scan_serial(const Mat& gen, std::span<const Felt> y);

/// Minimum weight over the nonzero row space of gen (rows must be independent).
/// The parallel kernel visits one representative per projective point; the
/// serial reference walks all q^k - 1 nonzero messages.
std::size_t min_weight(const Mat& gen);
std::size_t min_weight_serial(const Mat& gen);

/// Size of the smallest linearly dependent set of columns of h. A zero-row h
/// makes every single column dependent.
std::size_t min_dependent_columns(const Mat& h);
std::size_t min_dependent_columns_serial(const Mat& h);

/// Membership bitmap (indexed by canonical value) of all sums of k entries of
/// alpha taken at distinct positions.
std::vector<bool> subset_sums(const FieldSpec& f, std::span<const Felt> alpha, std::size_t k);
std::vector<bool> subset_sums_serial(const FieldSpec& f, std::span<const Felt> alpha, std::size_t k);
/// Same set via the sum-set recurrence over field values (no subset walk).
std::vector<bool> subset_sums_dp(const FieldSpec& f, std::span<const Felt> alpha, std::size_t k);

/// Digits of a message index, m_0 most significant.
Vec message_from_index(const FieldSpec& f, std::uint64_t index, std::size_t k);

/// q^k saturated at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::size_t k) noexcept;

}  // namespace ecpkit::kernels
