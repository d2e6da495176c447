#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ecpkit/linalg.hpp"

namespace ecpkit {

/// (n, k, d) triple; prints as "[n,k,d]".
struct Params {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;

    bool operator==(const Params&) const = default;
    std::string to_string() const;
};

/// A nonzero linear code held by its reduced row echelon generator, so two
/// equal codes always have identical generators. The minimum distance is
/// computed on demand and cached; copies share the cache.
class LinearCode {
  public:
    const FieldSpec& field() const noexcept { return gen_.field(); }
    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dimension() const noexcept { return gen_.rows(); }
    const Mat& generator() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    std::optional<std::size_t> cached_distance() const noexcept;
    void remember_distance(std::size_t d) const;
    std::optional<std::size_t> cached_dual_distance() const noexcept;
    void remember_dual_distance(std::size_t d) const;

    bool operator==(const LinearCode& other) const noexcept { return gen_ == other.gen_; }

  private:
    friend LinearCode code_from_generator(const FieldSpec&, const Mat&, std::vector<std::string>*);

    struct Cache {
        std::atomic<int> d{-1};
        std::atomic<int> d_dual{-1};
    };

    LinearCode(Mat gen, std::vector<std::size_t> pivots)
        : gen_(std::move(gen)), pivots_(std::move(pivots)), cache_(std::make_shared<Cache>()) {}

    Mat gen_;
    std::vector<std::size_t> pivots_;
    std::shared_ptr<Cache> cache_;
};

/// Reduces G; dependent rows are dropped and, when `warnings` is given,
/// reported there.
LinearCode code_from_generator(const FieldSpec& field, const Mat& g, std::vector<std::string>* warnings = nullptr);

Vec encode(const LinearCode& c, std::span<const Felt> msg);

/// Parity-check matrix in reduced form (a generator of the dual).
Mat parity_check(const LinearCode& c);
LinearCode dual(const LinearCode& c);

enum class DistanceStrategy { Auto, Enumerate, Columns };

struct DistanceOptions {
    DistanceStrategy strategy = DistanceStrategy::Auto;
    std::uint64_t budget = std::uint64_t{1} << 24;
};

/// Exact minimum distance. Enumerate scans the message space (q^k work),
/// Columns searches dependent column sets of a parity-check matrix (2^n
/// work). Auto picks the first one within budget and reuses a cached value;
/// an explicit strategy always recomputes.
std::size_t min_distance(const LinearCode& c, DistanceOptions opts = {});

/// Removes the coordinates in `removed` and keeps the rest (C_I keeps the
/// complement of I).
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& removed);

struct Support {
    std::vector<std::size_t> coords;
    bool full = false;
};

Support support(const LinearCode& c);

enum class CodeTag { MDS, NMDS, AMDS_only, Other };

std::string to_string(CodeTag tag);

/// d_dual is 0 for the full space, whose dual is zero.
struct CodeClass {
    CodeTag tag = CodeTag::Other;
    std::size_t d = 0;
    std::size_t d_dual = 0;
};

CodeClass classify(const LinearCode& c, DistanceOptions opts = {});

Params params(const LinearCode& c, DistanceOptions opts = {});

/// True iff every generator row of `sub` lies in `super`.
bool is_subcode(const LinearCode& sub, const LinearCode& super);
/// Same test for an arbitrary set of rows; no rows means true.
bool rows_in_code(const Mat& rows, const LinearCode& super);

/// Re-reads a prime-field code over an extension of that prime field, each
/// residue becoming the constant polynomial.
LinearCode lift(const LinearCode& c, const FieldSpec& extension);

}  // namespace ecpkit
