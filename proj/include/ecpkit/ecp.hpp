#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecpkit/code.hpp"
#include "ecpkit/schur.hpp"

namespace ecpkit {

/// A row of one of the two case tables: A = [n, ell + dk, n - ell - dd].
/// Family 'A' lists the six shapes for d(C) = 2 ell + 1, family 'D' the ten
/// shapes for d(C) = 2 ell + 2.
struct CaseRow {
    char family;
    int index;
    int dk;
    int dd;
};

std::span<const CaseRow> case_rows(char family);

struct CaseLabel {
    char family = 'A';
    int index = 0;

    bool operator==(const CaseLabel&) const = default;
    std::string to_string() const;  // e.g. "A.1"
};

/// Matches A's parameters against the table selected by d(C). Throws
/// BadDistance unless dC is 2 ell + 1 or 2 ell + 2.
std::optional<CaseLabel> case_label(std::size_t n, std::size_t ell, const Params& a, std::size_t dC);

struct EcpReport {
    std::size_t ell = 0;
    std::size_t n = 0;
    bool e1 = false;  // A*B inside the dual of C
    bool e2 = false;  // d(B dual) > ell
    bool e3 = false;  // k(A) > ell
    bool e4 = false;  // d(A) + d(C) > n
    std::size_t d_b_dual = 0;  // n + 1 when B is the full space
    Params a;
    Params b;
    Params c;
    std::optional<Params> b_dual;
    Params prod;
    CodeClass c_class;
    std::optional<CaseLabel> case_label;  // only for NMDS C with d(C) in {2 ell + 1, 2 ell + 2}
    ProductReport product;

    bool is_ecp() const noexcept { return e1 && e2 && e3 && e4; }
    std::string to_text() const;
    std::string to_record() const;
};

/// Evaluates all four pair conditions. Requires 1 <= ell < n and a common
/// field and length.
EcpReport ecp_verify(const LinearCode& a, const LinearCode& b, const LinearCode& c, std::size_t ell,
                     DistanceOptions opts = {});

enum class DecodeStatus { Decoded, Fail_NoLocator, Fail_ErasureUnsolvable, Fail_WeightExceeded };

std::string to_string(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Fail_NoLocator;
    std::optional<Vec> codeword;
    std::optional<Vec> error;
    std::optional<std::vector<std::size_t>> locator_zeroset;
    /// Oracle only: more than one codeword attains the minimum distance.
    bool tie = false;

    std::string to_text() const;
    std::string to_record() const;
};

/// Decoder bound to a verified pair. Construction runs ecp_verify once and
/// throws PreconditionFailed if the pair is not an ell-ECP for C.
class EcpDecoder {
  public:
    EcpDecoder(LinearCode a, LinearCode b, LinearCode c, std::size_t ell, DistanceOptions opts = {});

    /// Locator kernel, then an erasure solve on the zero set of each locator
    /// basis vector in order; the first solution of weight <= ell wins.
    DecodeResult decode(std::span<const Felt> y) const;

    const EcpReport& report() const noexcept { return report_; }

  private:
    LinearCode a_;
    LinearCode b_;
    LinearCode c_;
    std::size_t ell_;
    Mat h_;  // parity-check matrix of C
    EcpReport report_;
};

DecodeResult ecp_decode(const LinearCode& a, const LinearCode& b, const LinearCode& c, std::span<const Felt> y,
                        std::size_t ell, DistanceOptions opts = {});

/// Exhaustive nearest codeword; ties go to the smallest message index.
/// Throws TooLarge when q^k exceeds the budget.
DecodeResult nearest_codeword_oracle(const LinearCode& c, std::span<const Felt> y, DistanceOptions opts = {});

/// One candidate code of a pair search, with its label and d of its dual.
struct Candidate {
    std::string label;
    LinearCode code;
    std::size_t d_dual = 0;
};

/// GRS_a(alpha, 1) and its dual for a = 1..n-1, in that order. Distances of
/// these MDS codes are filled in from their parameters.
class GrsFamily {
  public:
    GrsFamily(const FieldSpec& field, const Vec& alpha);

    const std::vector<Candidate>& members() const noexcept { return members_; }
    const Vec& alpha() const noexcept { return alpha_; }

  private:
    Vec alpha_;
    std::vector<Candidate> members_;
};

struct SearchOptions {
    /// Also test B = (A*C) dual, the largest B satisfying the first condition
    /// for a given A.
    bool include_maximal_b = true;
    /// Extra A candidates tried after the family.
    std::vector<Candidate> extra_a;
    DistanceOptions dist;
};

struct EcpWitness {
    std::string a_label;
    std::string b_label;
    LinearCode a;
    LinearCode b;
    EcpReport report;
};

std::vector<EcpWitness> ecp_search(const LinearCode& c, std::size_t ell, const GrsFamily& family,
                                   const SearchOptions& opts = {});
std::vector<EcpWitness> ecp_search(const LinearCode& c, std::size_t ell, const Vec& alpha,
                                   const SearchOptions& opts = {});

}  // namespace ecpkit
