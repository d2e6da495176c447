#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecpkit/gf.hpp"

namespace ecpkit {

/// Dense row-major matrix over a FieldSpec.
class Mat {
  public:
    Mat(FieldSpec field, std::size_t rows, std::size_t cols);
    static Mat from_rows(const FieldSpec& field, const std::vector<Vec>& rows, std::size_t cols);
    static Mat from_rows(const FieldSpec& field, const std::vector<Vec>& rows);
    static Mat identity(const FieldSpec& field, std::size_t n);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Felt operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Felt& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Felt> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Felt> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    Mat transpose() const;
    Mat select_columns(std::span<const std::size_t> cols) const;
    Mat select_rows(std::size_t first, std::size_t count) const;
    Mat vstack(const Mat& below) const;
    void append_row(std::span<const Felt> values);

    bool is_zero() const noexcept;
    bool operator==(const Mat& other) const noexcept;

  private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

struct RrefResult {
    Mat reduced;                      // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing
};

/// Pivot = leftmost nonzero column, topmost nonzero entry at or below the current row.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// The first `rank` rows of the reduced form.
Mat row_basis(const Mat& m);
/// Basis of {x : M x^T = 0}, returned in reduced row echelon form.
Mat kernel(const Mat& m);
Mat mat_product(const Mat& a, const Mat& b);
bool rowspace_equal(const Mat& a, const Mat& b);

/// Reduces v against a matrix already in RREF with the given pivots; the
/// result is zero iff v lies in its row space.
Vec reduce_against(const Mat& reduced, std::span<const std::size_t> pivots, std::span<const Felt> v);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status;
    Vec x;  // set only when Unique
};

/// Solves M x = rhs.
SolveResult solve(const Mat& m, std::span<const Felt> rhs);

// Vector helpers. Lengths must agree.
Vec vec_add(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b);
Vec vec_sub(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b);
Vec vec_scale(const FieldSpec& f, Felt c, std::span<const Felt> a);
Vec vec_schur(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b);
Felt vec_dot(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b);
std::size_t vec_weight(std::span<const Felt> a) noexcept;
/// Row vector times matrix.
Vec vec_mat(std::span<const Felt> v, const Mat& m);

/// "rows cols" followed by one line per row.
std::string to_text(const Mat& m);

}  // namespace ecpkit
