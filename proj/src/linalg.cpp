#include "ecpkit/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "ecpkit/error.hpp"

namespace ecpkit {

Mat::Mat(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Felt{0}) {}

Mat Mat::from_rows(const FieldSpec& field, const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(Errc::ShapeMismatch, "ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!field.valid(rows[r][c])) throw Error(Errc::InvalidSpec, "entry is not a field element");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Mat Mat::from_rows(const FieldSpec& field, const std::vector<Vec>& rows) {
    return from_rows(field, rows, rows.empty() ? 0 : rows.front().size());
}

Mat Mat::identity(const FieldSpec& field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
    Mat s(field_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw Error(Errc::BadIndex, "column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) s(r, j) = (*this)(r, cols[j]);
    }
    return s;
}

Mat Mat::select_rows(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw Error(Errc::BadIndex, "row range out of bounds");
    Mat s(field_, count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), s.data_.begin());
    return s;
}

Mat Mat::vstack(const Mat& below) const {
    if (!(field_ == below.field_)) throw Error(Errc::FieldMismatch, "vstack over different fields");
    if (cols_ != below.cols_) throw Error(Errc::ShapeMismatch, "vstack with different column counts");
    Mat s(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), s.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return s;
}

void Mat::append_row(std::span<const Felt> values) {
    if (values.size() != cols_) throw Error(Errc::ShapeMismatch, "row length differs from column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool Mat::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Felt x) { return x.value == 0; });
}

bool Mat::operator==(const Mat& other) const noexcept {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RrefResult rref(const Mat& m) {
    const FieldSpec& f = m.field();
    Mat r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t sel = row;
        while (sel < r.rows() && r(sel, col).value == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row) {
            auto a = r.row(sel);
            auto b = r.row(row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Felt scale = f.inv(r(row, col));
        for (std::size_t c = col; c < r.cols(); ++c) r(row, c) = f.mul(r(row, c), scale);
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other == row) continue;
            const Felt factor = r(other, col);
            if (factor.value == 0) continue;
            const Felt neg = f.neg(factor);
            for (std::size_t c = col; c < r.cols(); ++c) {
                r(other, c) = f.add(r(other, c), f.mul(neg, r(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), row, std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat row_basis(const Mat& m) {
    auto res = rref(m);
    return res.reduced.select_rows(0, res.rank);
}

Mat kernel(const Mat& m) {
    const FieldSpec& f = m.field();
    const auto res = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : res.pivots) is_pivot[p] = true;

    Mat basis(f, 0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(m.cols(), f.zero());
        x[free] = f.one();
        for (std::size_t i = 0; i < res.rank; ++i) x[res.pivots[i]] = f.neg(res.reduced(i, free));
        basis.append_row(x);
    }
    if (basis.rows() == 0) return basis;
    return rref(basis).reduced;
}

Mat mat_product(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "product over different fields");
    if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
    const FieldSpec& f = a.field();
    Mat out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Felt x = a(i, k);
            if (x.value == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
    }
    return out;
}

bool rowspace_equal(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "row spaces over different fields");
    if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "row spaces of different lengths");
    return row_basis(a) == row_basis(b);
}

Vec reduce_against(const Mat& reduced, std::span<const std::size_t> pivots, std::span<const Felt> v) {
    const FieldSpec& f = reduced.field();
    Vec x(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Felt factor = x[pivots[i]];
        if (factor.value == 0) continue;
        const Felt neg = f.neg(factor);
        const auto r = reduced.row(i);
        for (std::size_t c = 0; c < x.size(); ++c) {
            if (r[c].value != 0) x[c] = f.add(x[c], f.mul(neg, r[c]));
        }
    }
    return x;
}

SolveResult solve(const Mat& m, std::span<const Felt> rhs) {
    if (rhs.size() != m.rows()) throw Error(Errc::ShapeMismatch, "right-hand side length differs from row count");
    const FieldSpec& f = m.field();
    Mat aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const auto res = rref(aug);
    if (!res.pivots.empty() && res.pivots.back() == m.cols()) return {SolveStatus::Inconsistent, {}};
    if (res.rank < m.cols()) return {SolveStatus::Underdetermined, {}};
    Vec x(m.cols(), f.zero());
    for (std::size_t i = 0; i < res.rank; ++i) x[res.pivots[i]] = res.reduced(i, m.cols());
    return {SolveStatus::Unique, std::move(x)};
}

namespace {
void check_len(std::span<const Felt> a, std::span<const Felt> b) {
    if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "vectors of different lengths");
}
}  // namespace

Vec vec_add(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b) {
    check_len(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_sub(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b) {
    check_len(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

Vec vec_scale(const FieldSpec& f, Felt c, std::span<const Felt> a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

Vec vec_schur(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b) {
    check_len(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
    return out;
}

Felt vec_dot(const FieldSpec& f, std::span<const Felt> a, std::span<const Felt> b) {
    check_len(a, b);
    Felt acc = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

std::size_t vec_weight(std::span<const Felt> a) noexcept {
    return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](Felt x) { return x.value != 0; }));
}

Vec vec_mat(std::span<const Felt> v, const Mat& m) {
    if (v.size() != m.rows()) throw Error(Errc::ShapeMismatch, "vector length differs from row count");
    const FieldSpec& f = m.field();
    Vec out(m.cols(), f.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r].value == 0) continue;
        const auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(v[r], row[c]));
    }
    return out;
}

std::string to_text(const Mat& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c).value;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace ecpkit
