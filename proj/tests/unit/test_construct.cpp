#include <doctest.h>

#include "ecpkit/construct.hpp"
#include "ecpkit/error.hpp"
#include "oracle.hpp"

using namespace ecpkit;

namespace {

Vec iota(std::size_t n) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Felt{static_cast<std::uint32_t>(i)});
    return v;
}

std::vector<long> as_longs(const Vec& v) {
    std::vector<long> out;
    for (Felt x : v) out.push_back(x.value);
    return out;
}

Vec interval(std::uint32_t lo, std::uint32_t hi) {
    Vec v;
    for (std::uint32_t x = lo; x <= hi; ++x) v.push_back(Felt{x});
    return v;
}

}  // namespace

TEST_SUITE("construct") {
    TEST_CASE("GRS generator rows are polynomial evaluations") {
        const FieldSpec f = FieldSpec::make(13);
        const Vec alpha{Felt{2}, Felt{5}, Felt{7}, Felt{11}, Felt{0}, Felt{1}};
        const Vec v{Felt{1}, Felt{3}, Felt{4}, Felt{1}, Felt{12}, Felt{6}};
        const Mat rows = grs_rows(GrsSpec{f, alpha, v, 3});
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<long> mono(i + 1, 0);
            mono[i] = 1;
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                const long want = oracle::md(long(v[j].value) * oracle::poly_eval(mono, alpha[j].value, 13), 13);
                CHECK(long(rows(i, j).value) == want);
            }
        }
    }

    TEST_CASE("twisted rows replace the hook monomial") {
        const FieldSpec f = FieldSpec::make(37);
        const Vec alpha = iota(10);
        const Mat rows = tgrs_rows(TgrsSpec::plus(GrsSpec{f, alpha, {}, 3}, Felt{6}));
        for (std::size_t j = 0; j < 10; ++j) {
            const long a = static_cast<long>(j);
            // x^2 + 6 x^3
            CHECK(long(rows(2, j).value) == oracle::md(a * a + 6 * a * a * a, 37));
        }
    }

    TEST_CASE("GRS codes are MDS and their duals are GRS") {
        std::mt19937_64 rng(41);
        const FieldSpec f = FieldSpec::make(11);
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t n = 4 + rng() % 7;
            Vec pool = f.elements();
            std::shuffle(pool.begin(), pool.end(), rng);
            const Vec alpha(pool.begin(), pool.begin() + static_cast<long>(n));
            Vec v;
            for (std::size_t j = 0; j < n; ++j) v.push_back(Felt{static_cast<std::uint32_t>(1 + rng() % 10)});
            const std::size_t k = 1 + rng() % (n - 1);
            const LinearCode c = grs(GrsSpec{f, alpha, v, k});
            const CodeClass cls = classify(c);
            CHECK(cls.tag == CodeTag::MDS);
            CHECK(cls.d == n - k + 1);

            CHECK(grs_equals(c, GrsSpec{f, alpha, v, k}));
            const auto found = grs_multiplier(c, alpha);
            REQUIRE(found.has_value());
            CHECK(grs(GrsSpec{f, alpha, *found, k}) == c);

            const LinearCode d = dual(c);
            const auto vd = grs_multiplier(d, alpha);
            REQUIRE(vd.has_value());
            CHECK(grs_equals(d, GrsSpec{f, alpha, *vd, n - k}));
        }
    }

    TEST_CASE("sum sets") {
        const FieldSpec f = FieldSpec::make(37);
        const Vec alpha = iota(10);
        CHECK(s_k_plus(f, alpha, 3) == interval(3, 24));
        CHECK(s_k_plus(f, alpha, 4) == interval(6, 30));

        std::mt19937_64 rng(42);
        for (unsigned p : {7u, 11u, 13u}) {
            const FieldSpec g = FieldSpec::make(p);
            for (int trial = 0; trial < 10; ++trial) {
                const std::size_t n = 3 + rng() % (p - 3);
                Vec pool = g.elements();
                std::shuffle(pool.begin(), pool.end(), rng);
                const Vec a(pool.begin(), pool.begin() + static_cast<long>(n));
                const std::size_t k = 1 + rng() % (n - 1);
                const Vec e = s_k_plus_enumerate(g, a, k);
                CHECK(e == s_k_plus_dp(g, a, k));
                std::set<long> got;
                for (Felt x : e) got.insert(x.value);
                CHECK(got == oracle::k_sums(as_longs(a), k, p));
            }
        }
    }

    TEST_CASE("twisted class prediction matches classification") {
        for (unsigned p : {7u, 11u}) {
            const FieldSpec f = FieldSpec::make(p);
            for (std::size_t n = 5; n <= p; n += 2) {
                for (std::size_t k = 2; k <= 3; ++k) {
                    for (std::uint32_t e = 1; e < p; ++e) {
                        const TgrsSpec spec = TgrsSpec::plus(GrsSpec{f, iota(n), {}, k}, Felt{e});
                        const CodeClass cls = classify(tgrs(spec));
                        const PlusClass pred = tgrs_plus_class(spec);
                        CHECK(cls.tag == (pred == PlusClass::MDS ? CodeTag::MDS : CodeTag::NMDS));
                    }
                }
            }
        }
    }

    TEST_CASE("the twisted NMDS code is not a GRS code") {
        const FieldSpec f = FieldSpec::make(37);
        const Vec alpha = iota(10);
        const LinearCode c = tgrs(TgrsSpec::plus(GrsSpec{f, alpha, {}, 3}, Felt{6}));
        CHECK_FALSE(grs_equals(c, GrsSpec{f, alpha, {}, 3}));
        CHECK_FALSE(grs_multiplier(c, alpha).has_value());
    }

    TEST_CASE("errors") {
        const FieldSpec f = FieldSpec::make(7);
        auto code_of = [](auto&& fn) {
            try {
                fn();
            } catch (const Error& e) {
                return e.code();
            }
            return Errc::InvariantViolated;
        };
        CHECK(code_of([&] { grs(GrsSpec{f, {Felt{1}, Felt{1}, Felt{2}}, {}, 2}); }) == Errc::InvalidSpec);
        CHECK(code_of([&] { grs(GrsSpec{f, iota(3), {Felt{1}, Felt{0}, Felt{1}}, 2}); }) == Errc::InvalidSpec);
        CHECK(code_of([&] { grs(GrsSpec{f, iota(3), {}, 0}); }) == Errc::BadK);
        CHECK(code_of([&] { grs(GrsSpec{f, iota(3), {}, 4}); }) == Errc::BadK);
        CHECK(code_of([&] { tgrs(TgrsSpec{GrsSpec{f, iota(5), {}, 2}, Felt{0}, 1, 1}); }) == Errc::InvalidSpec);
        CHECK(code_of([&] { tgrs(TgrsSpec{GrsSpec{f, iota(5), {}, 2}, Felt{1}, 1, 2}); }) == Errc::InvalidSpec);
        CHECK(code_of([&] { s_k_plus(f, iota(4), 4); }) == Errc::BadK);
        CHECK(code_of([&] { tgrs_plus_class(TgrsSpec{GrsSpec{f, iota(5), {}, 3}, Felt{1}, 2, 0}); }) ==
              Errc::PreconditionFailed);
        CHECK(binomial(10, 3) == 120);
        CHECK(binomial(200, 100) == UINT64_MAX);
    }
}
