#include "ecpkit/code.hpp"

#include <algorithm>
#include <sstream>

#include "ecpkit/error.hpp"
#include "ecpkit/kernels.hpp"

namespace ecpkit {

std::string Params::to_string() const {
    std::ostringstream os;
    os << '[' << n << ',' << k << ',' << d << ']';
    return os.str();
}

std::optional<std::size_t> LinearCode::cached_distance() const noexcept {
    const int d = cache_->d.load(std::memory_order_acquire);
    if (d < 0) return std::nullopt;
    return static_cast<std::size_t>(d);
}

void LinearCode::remember_distance(std::size_t d) const {
    if (d < 1 || d > length() - dimension() + 1) {
        throw Error(Errc::InvariantViolated, "distance " + std::to_string(d) + " breaks the Singleton bound for " +
                                                 Params{length(), dimension(), d}.to_string());
    }
    cache_->d.store(static_cast<int>(d), std::memory_order_release);
}

std::optional<std::size_t> LinearCode::cached_dual_distance() const noexcept {
    const int d = cache_->d_dual.load(std::memory_order_acquire);
    if (d < 0) return std::nullopt;
    return static_cast<std::size_t>(d);
}

void LinearCode::remember_dual_distance(std::size_t d) const {
    cache_->d_dual.store(static_cast<int>(d), std::memory_order_release);
}

LinearCode code_from_generator(const FieldSpec& field, const Mat& g, std::vector<std::string>* warnings) {
    if (!(g.field() == field)) throw Error(Errc::FieldMismatch, "generator is over a different field");
    auto res = rref(g);
    if (res.rank == 0) throw Error(Errc::ZeroCode, "generator has rank 0");
    if (warnings && res.rank < g.rows()) {
        warnings->push_back("dropped " + std::to_string(g.rows() - res.rank) + " dependent generator row(s)");
    }
    return LinearCode(res.reduced.select_rows(0, res.rank), std::move(res.pivots));
}

Vec encode(const LinearCode& c, std::span<const Felt> msg) {
    if (msg.size() != c.dimension()) throw Error(Errc::ShapeMismatch, "message length differs from dimension");
    return vec_mat(msg, c.generator());
}

Mat parity_check(const LinearCode& c) {
    return kernel(c.generator());
}

LinearCode dual(const LinearCode& c) {
    if (c.dimension() == c.length()) throw Error(Errc::TrivialDual, "dual of the full space is zero");
    return code_from_generator(c.field(), parity_check(c));
}

std::size_t min_distance(const LinearCode& c, DistanceOptions opts) {
    const auto cached = c.cached_distance();
    if (cached && opts.strategy == DistanceStrategy::Auto) return *cached;
    const std::uint64_t enum_work = kernels::saturating_pow(c.field().q(), c.dimension());
    const std::uint64_t col_work = kernels::saturating_pow(2, c.length());

    DistanceStrategy s = opts.strategy;
    if (s == DistanceStrategy::Auto) {
        if (enum_work <= opts.budget) {
            s = DistanceStrategy::Enumerate;
        } else if (col_work <= opts.budget) {
            s = DistanceStrategy::Columns;
        } else {
            throw Error(Errc::TooLarge, "minimum distance of " + Params{c.length(), c.dimension(), 0}.to_string() +
                                            " exceeds the work budget");
        }
    }

    std::size_t d = 0;
    if (s == DistanceStrategy::Enumerate) {
        d = kernels::min_weight(c.generator());
    } else if (c.dimension() == c.length()) {
        d = 1;  // no parity checks: every single column is dependent
    } else {
        d = kernels::min_dependent_columns(parity_check(c));
    }
    if (cached && *cached != d) throw Error(Errc::InvariantViolated, "distance strategies disagree");
    c.remember_distance(d);
    return d;
}

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& removed) {
    const std::size_t n = c.length();
    std::vector<bool> drop(n, false);
    for (auto i : removed) {
        if (i >= n) throw Error(Errc::BadIndex, "puncture index " + std::to_string(i) + " out of range");
        drop[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j) {
        if (!drop[j]) keep.push_back(j);
    }
    if (keep.empty()) throw Error(Errc::EmptyResult, "puncturing removes every coordinate");
    const Mat g = c.generator().select_columns(keep);
    if (g.is_zero()) throw Error(Errc::EmptyResult, "punctured code is zero");
    LinearCode out = code_from_generator(c.field(), g);

    const std::size_t m = n - keep.size();
    if (auto d = c.cached_distance(); d && m < *d && out.dimension() != c.dimension()) {
        throw Error(Errc::InvariantViolated, "puncturing fewer than d coordinates lost dimension");
    }
    return out;
}

Support support(const LinearCode& c) {
    Support s;
    const Mat& g = c.generator();
    for (std::size_t j = 0; j < g.cols(); ++j) {
        for (std::size_t r = 0; r < g.rows(); ++r) {
            if (g(r, j).value != 0) {
                s.coords.push_back(j);
                break;
            }
        }
    }
    s.full = s.coords.size() == g.cols();
    return s;
}

std::string to_string(CodeTag tag) {
    switch (tag) {
        case CodeTag::MDS: return "MDS";
        case CodeTag::NMDS: return "NMDS";
        case CodeTag::AMDS_only: return "AMDS";
        case CodeTag::Other: return "Other";
    }
    return "Other";
}

CodeClass classify(const LinearCode& c, DistanceOptions opts) {
    CodeClass cls;
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    cls.d = min_distance(c, opts);
    if (k < n) {
        if (auto cached = c.cached_dual_distance()) {
            cls.d_dual = *cached;
        } else {
            cls.d_dual = min_distance(dual(c), opts);
            c.remember_dual_distance(cls.d_dual);
        }
    }

    if (cls.d == n - k + 1) {
        cls.tag = CodeTag::MDS;
    } else if (cls.d == n - k) {
        cls.tag = cls.d_dual == k ? CodeTag::NMDS : CodeTag::AMDS_only;
    } else {
        cls.tag = CodeTag::Other;
    }
    return cls;
}

Params params(const LinearCode& c, DistanceOptions opts) {
    return Params{c.length(), c.dimension(), min_distance(c, opts)};
}

bool rows_in_code(const Mat& rows, const LinearCode& super) {
    if (!(rows.field() == super.field())) throw Error(Errc::FieldMismatch, "codes over different fields");
    if (rows.cols() != super.length()) throw Error(Errc::LengthMismatch, "codes of different lengths");
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        const Vec rem = reduce_against(super.generator(), super.pivots(), rows.row(r));
        if (vec_weight(rem) != 0) return false;
    }
    return true;
}

bool is_subcode(const LinearCode& sub, const LinearCode& super) {
    if (sub.dimension() > super.dimension() && sub.field() == super.field() && sub.length() == super.length()) {
        return false;
    }
    return rows_in_code(sub.generator(), super);
}

LinearCode lift(const LinearCode& c, const FieldSpec& extension) {
    const FieldSpec& base = c.field();
    if (base.m() != 1) throw Error(Errc::FieldMismatch, "only prime-field codes can be lifted");
    if (extension.p() != base.p()) throw Error(Errc::FieldMismatch, "extension has a different characteristic");
    Mat g(extension, c.dimension(), c.length());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t j = 0; j < g.cols(); ++j) g(r, j) = Felt{c.generator()(r, j).value};
    }
    return code_from_generator(extension, g);
}

}  // namespace ecpkit
