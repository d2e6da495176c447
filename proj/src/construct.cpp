#include "ecpkit/construct.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "ecpkit/error.hpp"
#include "ecpkit/kernels.hpp"

namespace ecpkit {

void GrsSpec::validate() const {
    const std::size_t n = alpha.size();
    if (n == 0) throw Error(Errc::InvalidSpec, "empty evaluation sequence");
    if (n > field.q()) throw Error(Errc::InvalidSpec, "more evaluation points than field elements");
    std::set<std::uint32_t> seen;
    for (Felt a : alpha) {
        if (!field.valid(a)) throw Error(Errc::InvalidSpec, "evaluation point outside the field");
        if (!seen.insert(a.value).second) {
            throw Error(Errc::InvalidSpec, "evaluation point " + std::to_string(a.value) + " repeated");
        }
    }
    if (!v.empty()) {
        if (v.size() != n) throw Error(Errc::InvalidSpec, "multiplier length differs from evaluation sequence");
        for (Felt x : v) {
            if (!field.valid(x) || x.value == 0) throw Error(Errc::InvalidSpec, "multiplier entries must be nonzero");
        }
    }
    if (k < 1 || k > n) throw Error(Errc::BadK, "dimension must lie in 1..n");
}

Vec GrsSpec::multiplier() const {
    return v.empty() ? Vec(alpha.size(), field.one()) : v;
}

void TgrsSpec::validate() const {
    grs.validate();
    if (!grs.field.valid(eta) || eta.value == 0) throw Error(Errc::InvalidSpec, "twist coefficient must be nonzero");
    if (t < 1) throw Error(Errc::InvalidSpec, "twist must be at least 1");
    if (h >= grs.k) throw Error(Errc::InvalidSpec, "hook must be below k");
}

TgrsSpec TgrsSpec::plus(GrsSpec grs, Felt eta) {
    const std::size_t k = grs.k;
    return TgrsSpec{std::move(grs), eta, 1, k == 0 ? 0 : k - 1};
}

Mat grs_rows(const GrsSpec& spec) {
    spec.validate();
    const FieldSpec& f = spec.field;
    const Vec v = spec.multiplier();
    const std::size_t n = spec.alpha.size();
    Mat g(f, spec.k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Felt power = f.one();
        for (std::size_t i = 0; i < spec.k; ++i) {
            g(i, j) = f.mul(v[j], power);
            power = f.mul(power, spec.alpha[j]);
        }
    }
    return g;
}

Mat tgrs_rows(const TgrsSpec& spec) {
    spec.validate();
    const FieldSpec& f = spec.grs.field;
    Mat g = grs_rows(spec.grs);
    const Vec v = spec.grs.multiplier();
    const auto twist_degree = static_cast<std::int64_t>(spec.grs.k - 1 + spec.t);
    for (std::size_t j = 0; j < g.cols(); ++j) {
        const Felt extra = f.mul(spec.eta, f.pow(spec.grs.alpha[j], twist_degree));
        g(spec.h, j) = f.add(g(spec.h, j), f.mul(v[j], extra));
    }
    return g;
}

LinearCode grs(const GrsSpec& spec) {
    return code_from_generator(spec.field, grs_rows(spec));
}

LinearCode tgrs(const TgrsSpec& spec) {
    LinearCode c = code_from_generator(spec.grs.field, tgrs_rows(spec));
    if (c.dimension() != spec.grs.k) throw Error(Errc::InvalidSpec, "twisted basis is linearly dependent");
    return c;
}

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;  // exact: r * num is C(n-k+i, i) * i
    }
    return r;
}

namespace {

void check_k(const Vec& alpha, std::size_t k) {
    if (k < 1 || k >= alpha.size()) throw Error(Errc::BadK, "subset size must satisfy 1 <= k < n");
}

Vec bitmap_to_set(const std::vector<bool>& bits) {
    Vec out;
    for (std::size_t v = 0; v < bits.size(); ++v) {
        if (bits[v]) out.push_back(Felt{static_cast<std::uint32_t>(v)});
    }
    return out;
}

}  // namespace

Vec s_k_plus_enumerate(const FieldSpec& f, const Vec& alpha, std::size_t k) {
    check_k(alpha, k);
    return bitmap_to_set(kernels::subset_sums(f, alpha, k));
}

Vec s_k_plus_dp(const FieldSpec& f, const Vec& alpha, std::size_t k) {
    check_k(alpha, k);
    return bitmap_to_set(kernels::subset_sums_dp(f, alpha, k));
}

Vec s_k_plus(const FieldSpec& f, const Vec& alpha, std::size_t k) {
    check_k(alpha, k);
    if (binomial(alpha.size(), k) <= (std::uint64_t{1} << 20)) return s_k_plus_enumerate(f, alpha, k);
    return s_k_plus_dp(f, alpha, k);
}

PlusClass tgrs_plus_class(const TgrsSpec& spec) {
    spec.validate();
    if (!spec.is_plus()) throw Error(Errc::PreconditionFailed, "class prediction needs t = 1 and h = k - 1");
    const FieldSpec& f = spec.grs.field;
    if (spec.grs.k == spec.grs.alpha.size()) return PlusClass::MDS;
    const Felt target = f.neg(f.inv(spec.eta));
    const Vec sums = s_k_plus(f, spec.grs.alpha, spec.grs.k);
    return std::binary_search(sums.begin(), sums.end(), target) ? PlusClass::NMDS : PlusClass::MDS;
}

bool grs_equals(const LinearCode& c, const GrsSpec& spec) {
    if (!(c.field() == spec.field)) throw Error(Errc::FieldMismatch, "code and spec over different fields");
    if (c.length() != spec.alpha.size()) throw Error(Errc::LengthMismatch, "code and spec of different lengths");
    if (c.dimension() != spec.k) return false;
    return c == grs(spec);
}

std::optional<Vec> grs_multiplier(const LinearCode& c, const Vec& alpha) {
    const FieldSpec& f = c.field();
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    if (alpha.size() != n) throw Error(Errc::LengthMismatch, "evaluation sequence length differs from code length");
    GrsSpec base{f, alpha, {}, k};
    base.validate();
    if (k == n) return Vec(n, f.one());

    // w * C lies in GRS_k(alpha, 1) iff every parity check h of it satisfies
    // sum_j h_j c_j w_j = 0 for every generator row c; solve for w.
    const Mat h = parity_check(grs(base));
    Mat system(f, h.rows() * k, n);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t j = 0; j < n; ++j) system(i * k + r, j) = f.mul(h(i, j), c.generator()(r, j));
        }
    }
    const Mat w_space = kernel(system);
    if (w_space.rows() == 0) return std::nullopt;

    auto try_w = [&](const Vec& w) -> std::optional<Vec> {
        for (Felt x : w) {
            if (x.value == 0) return std::nullopt;
        }
        Vec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = f.inv(w[j]);
        GrsSpec candidate{f, alpha, v, k};
        if (grs_equals(c, candidate)) return v;
        return std::nullopt;
    };

    Vec sum(n, f.zero());
    for (std::size_t r = 0; r < w_space.rows(); ++r) {
        const auto row = w_space.row(r);
        Vec w(row.begin(), row.end());
        if (auto v = try_w(w)) return v;
        sum = vec_add(f, sum, w);
    }
    if (auto v = try_w(sum)) return v;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec w(n, f.zero());
        for (std::size_t r = 0; r < w_space.rows(); ++r) {
            const Felt coef{static_cast<std::uint32_t>(rng() % f.q())};
            w = vec_add(f, w, vec_scale(f, coef, w_space.row(r)));
        }
        if (auto v = try_w(w)) return v;
    }
    return std::nullopt;
}

}  // namespace ecpkit
