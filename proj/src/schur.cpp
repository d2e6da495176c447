#include "ecpkit/schur.hpp"

#include <algorithm>
#include <sstream>

#include "ecpkit/error.hpp"

namespace ecpkit {

namespace {

void check_compatible(const LinearCode& a, const LinearCode& b) {
    if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "codes over different fields");
    if (a.length() != b.length()) throw Error(Errc::LengthMismatch, "codes of different lengths");
}

bool is_mds(const LinearCode& c, DistanceOptions opts) {
    return min_distance(c, opts) == c.length() - c.dimension() + 1;
}

}  // namespace

LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
    check_compatible(a, b);
    const FieldSpec& f = a.field();
    const Mat& ga = a.generator();
    const Mat& gb = b.generator();
    Mat rows(f, ga.rows() * gb.rows(), a.length());
    for (std::size_t i = 0; i < ga.rows(); ++i) {
        for (std::size_t j = 0; j < gb.rows(); ++j) {
            auto out = rows.row(i * gb.rows() + j);
            for (std::size_t c = 0; c < a.length(); ++c) out[c] = f.mul(ga(i, c), gb(j, c));
        }
    }
    if (rows.is_zero()) throw Error(Errc::ZeroCode, "Schur product is zero");
    return code_from_generator(f, rows);
}

bool product_in_dual(const LinearCode& a, const LinearCode& b, const LinearCode& c) {
    check_compatible(a, b);
    check_compatible(a, c);
    const FieldSpec& f = a.field();
    const std::size_t n = a.length();
    const Mat& ga = a.generator();
    const Mat& gb = b.generator();
    const Mat& gc = c.generator();
    Vec bc(n);
    for (std::size_t j = 0; j < gb.rows(); ++j) {
        for (std::size_t l = 0; l < gc.rows(); ++l) {
            for (std::size_t x = 0; x < n; ++x) bc[x] = f.mul(gb(j, x), gc(l, x));
            for (std::size_t i = 0; i < ga.rows(); ++i) {
                if (vec_dot(f, ga.row(i), bc).value != 0) return false;
            }
        }
    }
    return true;
}

std::string to_string(BoundCheck b) {
    switch (b) {
        case BoundCheck::Holds: return "holds";
        case BoundCheck::Fails: return "fails";
        case BoundCheck::NotApplicable: return "n/a";
    }
    return "n/a";
}

std::size_t dual_distance(const LinearCode& c, DistanceOptions opts) {
    if (c.dimension() == c.length()) return c.length() + 1;
    return min_distance(dual(c), opts);
}

ProductReport product_report(const LinearCode& a, const LinearCode& b, DistanceOptions opts) {
    return product_report(a, b, schur_product(a, b), opts);
}

ProductReport product_report(const LinearCode& a, const LinearCode& b, const LinearCode& prod, DistanceOptions opts) {
    check_compatible(a, b);
    check_compatible(a, prod);
    ProductReport r;
    r.n = a.length();
    r.kA = a.dimension();
    r.kB = b.dimension();
    r.k_prod = prod.dimension();
    r.d_prod = min_distance(prod, opts);
    const long long bound = static_cast<long long>(r.n) - static_cast<long long>(r.kA + r.kB) + 2;
    r.psb = static_cast<std::size_t>(std::max(1LL, bound));
    if (r.d_prod > r.psb) {
        throw Error(Errc::InvariantViolated, "product distance " + std::to_string(r.d_prod) +
                                                 " exceeds the product Singleton bound " + std::to_string(r.psb));
    }
    r.is_pmds = r.d_prod >= 2 && static_cast<long long>(r.d_prod) == bound;

    if (support(a).full && support(b).full && (is_mds(a, opts) || is_mds(b, opts))) {
        const std::size_t need = std::min(r.n, r.kA + r.kB - 1);
        r.fullsupp_bound = r.k_prod >= need ? BoundCheck::Holds : BoundCheck::Fails;
    }
    return r;
}

std::string ProductReport::to_text() const {
    std::ostringstream os;
    os << "n: " << n << '\n'
       << "k_A: " << kA << '\n'
       << "k_B: " << kB << '\n'
       << "k_prod: " << k_prod << '\n'
       << "d_prod: " << d_prod << '\n'
       << "psb: " << psb << '\n'
       << "pmds: " << (is_pmds ? "yes" : "no") << '\n'
       << "fullsupp_bound: " << to_string(fullsupp_bound) << '\n';
    return os.str();
}

std::string ProductReport::to_record() const {
    std::ostringstream os;
    os << "n=" << n << " kA=" << kA << " kB=" << kB << " k_prod=" << k_prod << " d_prod=" << d_prod << " psb=" << psb
       << " pmds=" << (is_pmds ? 1 : 0) << " fullsupp_bound=" << to_string(fullsupp_bound);
    return os.str();
}

bool mds_product_check(const LinearCode& a, const LinearCode& b, DistanceOptions opts) {
    check_compatible(a, b);
    if (!is_mds(a, opts) || !is_mds(b, opts)) throw Error(Errc::PreconditionFailed, "both codes must be MDS");
    const LinearCode prod = schur_product(a, b);
    if (prod.dimension() != a.dimension() + b.dimension() - 1) return false;
    if (!is_mds(prod, opts)) {
        throw Error(Errc::InvariantViolated, "product of dimension kA + kB - 1 is not MDS");
    }
    return true;
}

bool dual_distance_bound_check(const LinearCode& a, const LinearCode& b, const LinearCode& c, std::size_t a_bound,
                               std::size_t b_bound, DistanceOptions opts) {
    if (a_bound == 0 || b_bound == 0) throw Error(Errc::PreconditionFailed, "a and b must be positive");
    if (!product_in_dual(a, b, c)) throw Error(Errc::PreconditionFailed, "A*B is not inside the dual of C");
    if (dual_distance(a, opts) <= a_bound) throw Error(Errc::PreconditionFailed, "d(A dual) must exceed a");
    if (dual_distance(b, opts) <= b_bound) throw Error(Errc::PreconditionFailed, "d(B dual) must exceed b");
    const std::size_t d = min_distance(c, opts);
    if (d < a_bound + b_bound) {
        throw Error(Errc::InvariantViolated,
                    "d(C) = " + std::to_string(d) + " is below a + b = " + std::to_string(a_bound + b_bound));
    }
    return true;
}

}  // namespace ecpkit
