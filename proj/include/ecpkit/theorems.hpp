#pragma once

// Parameter tables for codes with an error-correcting pair. The same rows
// drive the table renderer and the theorem consequence checks.

#include <optional>
#include <string>
#include <vector>

#include "ecpkit/code.hpp"
#include "ecpkit/ecp.hpp"

namespace ecpkit {

/// a*n + b*ell + c, rendered with the usual symbols ("n−2ℓ−1").
struct Affine {
    int n = 0;
    int ell = 0;
    int c = 0;

    long long eval(std::size_t n_value, std::size_t ell_value) const noexcept;
    std::string render() const;
};

/// [n, k, d] with k and d affine in (n, ell).
struct ParamShape {
    Affine k;
    Affine d;

    /// nullopt when k or d would not be positive.
    std::optional<Params> eval(std::size_t n, std::size_t ell) const;
    bool matches(const Params& p, std::size_t ell) const;
    std::string render() const;
};

/// Upper bounds on ell appearing in the tables.
enum class EllBound {
    HalfMinusOne,      // ell < n/2 - 1
    NMinusThreeHalf,   // ell < (n-3)/2
    HalfMinusTwo,      // ell < n/2 - 2
};

struct EllRange {
    int min_ell = 2;
    EllBound upper = EllBound::HalfMinusOne;

    bool contains(std::size_t n, std::size_t ell) const noexcept;
    std::string render() const;
};

/// One listed possibility of a table row.
struct Outcome {
    enum class Kind { SmallCode, Split, GrsStructure };
    enum class Prod { Unconstrained, CDual, Shape };

    Kind kind = Kind::Split;
    bool n_odd = false;  // SmallCode: required parity of n
    std::optional<ParamShape> b_dual;
    Prod prod = Prod::Unconstrained;
    ParamShape prod_shape{};

    std::string render() const;
};

struct TheoremRow {
    int table = 0;    // 1: MDS C, 2: NMDS C
    std::string id;   // empty for rows quoted from earlier work
    EllRange range;
    CodeTag c_tag = CodeTag::NMDS;
    ParamShape c;
    ParamShape a;
    std::optional<CaseLabel> case_label;
    bool a_full = false;
    bool needs_b_dual_above_ell_plus_one = false;
    std::vector<Outcome> outcomes;

    /// "A=[...] → outcome or outcome" as printed in the tables.
    std::string render_entry() const;
};

const std::vector<TheoremRow>& theorem_rows();

/// Distinct theorem ids in table order.
std::vector<std::string> theorem_ids();

/// The case-lemma shape for a row of case_rows().
ParamShape case_shape(const CaseRow& row);

/// Both case lemmas and both tables as plain text.
std::string emit_tables();

}  // namespace ecpkit
