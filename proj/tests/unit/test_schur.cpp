#include <doctest.h>

#include "ecpkit/construct.hpp"
#include "ecpkit/error.hpp"
#include "ecpkit/schur.hpp"
#include "oracle.hpp"

using namespace ecpkit;

namespace {

Vec iota(std::size_t n) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Felt{static_cast<std::uint32_t>(i)});
    return v;
}

LinearCode random_code(const FieldSpec& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        const auto im = oracle::random_imat(k, n, f.p(), rng);
        if (oracle::rank(im, f.p()) == k) return code_from_generator(f, oracle::from_imat(f, im, n));
    }
}

// Span of every product of two codewords, built from the full codeword lists.
oracle::IMat product_span(const LinearCode& a, const LinearCode& b, long p) {
    oracle::IMat rows;
    const auto wa = oracle::all_codewords(oracle::to_imat(a.generator()), p);
    const auto wb = oracle::all_codewords(oracle::to_imat(b.generator()), p);
    for (const auto& x : wa) {
        for (const auto& y : wb) {
            std::vector<long> z(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) z[j] = oracle::md(x[j] * y[j], p);
            rows.push_back(z);
        }
    }
    return rows;
}

}  // namespace

TEST_SUITE("schur") {
    TEST_CASE("product of generator rows spans all codeword products") {
        std::mt19937_64 rng(51);
        const FieldSpec f = FieldSpec::make(3);
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t n = 4 + rng() % 3;
            const LinearCode a = random_code(f, 1 + rng() % 2, n, rng);
            const LinearCode b = random_code(f, 1 + rng() % 2, n, rng);
            const auto span = product_span(a, b, 3);
            const std::size_t r = oracle::rank(span, 3);
            if (r == 0) continue;
            const LinearCode prod = schur_product(a, b);
            CHECK(prod.dimension() == r);
            CHECK(rows_in_code(oracle::from_imat(f, span, n), prod));
        }
    }

    TEST_CASE("product of GRS codes on a common sequence") {
        const FieldSpec f = FieldSpec::make(37);
        const Vec alpha = iota(10);
        for (std::size_t a = 1; a <= 5; ++a) {
            for (std::size_t b = 1; a + b - 1 <= 10; ++b) {
                const LinearCode prod = schur_product(grs(GrsSpec{f, alpha, {}, a}), grs(GrsSpec{f, alpha, {}, b}));
                CHECK(prod == grs(GrsSpec{f, alpha, {}, a + b - 1}));
            }
        }
    }

    TEST_CASE("product Singleton bound and report") {
        std::mt19937_64 rng(52);
        const FieldSpec f = FieldSpec::make(5);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 4 + rng() % 5;
            const LinearCode a = random_code(f, 1 + rng() % 3, n, rng);
            const LinearCode b = random_code(f, 1 + rng() % 3, n, rng);
            const ProductReport r = product_report(a, b);
            const long bound = std::max<long>(1, long(n) - long(a.dimension()) - long(b.dimension()) + 2);
            CHECK(long(r.psb) == bound);
            CHECK(r.d_prod <= r.psb);
            CHECK(r.is_pmds == (r.d_prod == r.psb && r.d_prod >= 2));
        }
        const FieldSpec g = FieldSpec::make(37);
        const Vec alpha = iota(10);
        const ProductReport r = product_report(grs(GrsSpec{g, alpha, {}, 3}), grs(GrsSpec{g, alpha, {}, 4}));
        CHECK(r.k_prod == 6);
        CHECK(r.d_prod == 5);
        CHECK(r.psb == 5);
        CHECK(r.is_pmds);
        CHECK(r.fullsupp_bound == BoundCheck::Holds);
        CHECK(r.to_record().find("pmds=1") != std::string::npos);
    }

    TEST_CASE("membership of the product in a dual") {
        const FieldSpec f = FieldSpec::make(37);
        const Vec alpha = iota(10);
        // The dual of C is GRS_6, and GRS_3 * GRS_kb = GRS_(kb+2).
        const LinearCode c = dual(grs(GrsSpec{f, alpha, {}, 6}));
        const LinearCode a = grs(GrsSpec{f, alpha, {}, 3});
        for (std::size_t kb = 1; kb <= 5; ++kb) {
            const LinearCode b = grs(GrsSpec{f, alpha, {}, kb});
            const LinearCode prod = schur_product(a, b);
            const bool want = c.dimension() < c.length() && is_subcode(prod, dual(c));
            CHECK(product_in_dual(a, b, c) == want);
            CHECK(want == (kb <= 4));
        }
    }

    TEST_CASE("MDS product lemma and dual distance bound") {
        const FieldSpec f = FieldSpec::make(13);
        const Vec alpha = iota(12);
        CHECK(mds_product_check(grs(GrsSpec{f, alpha, {}, 3}), grs(GrsSpec{f, alpha, {}, 4})));

        // GRS_2 * GRS_3 = GRS_4 lies in the dual of GRS_8; d(A dual) = 3, d(B dual) = 4.
        const LinearCode a = grs(GrsSpec{f, alpha, {}, 2});
        const LinearCode b = grs(GrsSpec{f, alpha, {}, 3});
        const LinearCode c = dual(grs(GrsSpec{f, alpha, {}, 8}));
        CHECK(dual_distance(a) == 3);
        CHECK(dual_distance(b) == 4);
        CHECK(dual_distance_bound_check(a, b, c, 2, 3));
        CHECK_THROWS_AS(dual_distance_bound_check(a, b, c, 3, 3), Error);
        CHECK(dual_distance(code_from_generator(f, Mat::identity(f, 4))) == 5);
    }

    TEST_CASE("errors") {
        const FieldSpec f = FieldSpec::make(7);
        const Mat e0 = Mat::from_rows(f, {{Felt{1}, Felt{0}}});
        const Mat e1 = Mat::from_rows(f, {{Felt{0}, Felt{1}}});
        try {
            schur_product(code_from_generator(f, e0), code_from_generator(f, e1));
            FAIL("expected ZeroCode");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ZeroCode);
        }
        const Mat longer = Mat::from_rows(f, {{Felt{1}, Felt{0}, Felt{2}}});
        CHECK_THROWS_AS(schur_product(code_from_generator(f, e0), code_from_generator(f, longer)), Error);
    }
}
