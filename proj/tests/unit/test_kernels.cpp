#include <doctest.h>

#include "ecpkit/code.hpp"
#include "ecpkit/kernels.hpp"
#include "oracle.hpp"

using namespace ecpkit;

namespace {

Mat random_full_rank(const FieldSpec& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        const auto im = oracle::random_imat(k, n, f.p(), rng);
        if (oracle::rank(im, f.p()) == k) return oracle::from_imat(f, im, n);
    }
}

Vec random_word(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    Vec y(n);
    for (auto& x : y) x = Felt{static_cast<std::uint32_t>(rng() % f.q())};
    return y;
}

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("nearest_scan matches the serial scan and brute force") {
        std::mt19937_64 rng(21);
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            const FieldSpec f = FieldSpec::make(p);
            for (int trial = 0; trial < 15; ++trial) {
                const std::size_t n = 3 + rng() % 7;
                const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 4);
                const Mat g = random_full_rank(f, k, n, rng);
                const Vec y = random_word(f, n, rng);
                const auto par = kernels::nearest_scan(g, y);
                const auto ser = kernels::nearest_scan_serial(g, y);
                CHECK(par.message_index == ser.message_index);
                CHECK(par.distance == ser.distance);
                CHECK(par.count_at_min == ser.count_at_min);

                std::size_t best = n + 1;
                std::uint64_t count = 0;
                for (const auto& w : oracle::all_codewords(oracle::to_imat(g), p)) {
                    std::size_t dist = 0;
                    for (std::size_t j = 0; j < n; ++j) dist += (w[j] != long(y[j].value));
                    if (dist < best) {
                        best = dist;
                        count = 0;
                    }
                    if (dist == best) ++count;
                }
                CHECK(par.distance == best);
                CHECK(par.count_at_min == count);
                const Vec msg = kernels::message_from_index(f, par.message_index, k);
                std::size_t dist = 0;
                const Vec cw = vec_mat(msg, g);
                for (std::size_t j = 0; j < n; ++j) dist += (cw[j] != y[j]);
                CHECK(dist == best);
            }
        }
    }

    TEST_CASE("min_weight matches the serial walk and brute force") {
        std::mt19937_64 rng(22);
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            const FieldSpec f = FieldSpec::make(p);
            for (int trial = 0; trial < 15; ++trial) {
                const std::size_t n = 2 + rng() % 9;
                const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 4);
                const Mat g = random_full_rank(f, k, n, rng);
                const std::size_t want = oracle::min_distance(oracle::to_imat(g), p);
                CHECK(kernels::min_weight(g) == want);
                CHECK(kernels::min_weight_serial(g) == want);
            }
        }
    }

    TEST_CASE("min_dependent_columns equals the distance of the kernel code") {
        std::mt19937_64 rng(23);
        for (unsigned p : {2u, 3u, 5u}) {
            const FieldSpec f = FieldSpec::make(p);
            for (int trial = 0; trial < 15; ++trial) {
                const std::size_t n = 3 + rng() % 7;
                const std::size_t r = 1 + rng() % (n - 1);
                const Mat h = random_full_rank(f, r, n, rng);
                const Mat g = kernel(h);
                const std::size_t want = oracle::min_distance(oracle::to_imat(g), p);
                CHECK(kernels::min_dependent_columns(h) == want);
                CHECK(kernels::min_dependent_columns_serial(h) == want);
            }
        }
    }

    TEST_CASE("subset sums: parallel, serial and recurrence agree with bitmask enumeration") {
        std::mt19937_64 rng(24);
        for (unsigned p : {7u, 13u, 37u}) {
            const FieldSpec f = FieldSpec::make(p);
            for (int trial = 0; trial < 10; ++trial) {
                const std::size_t n = 3 + rng() % std::min<unsigned>(p - 2, 12);
                std::vector<long> alpha_i(p);
                std::iota(alpha_i.begin(), alpha_i.end(), 0L);
                std::shuffle(alpha_i.begin(), alpha_i.end(), rng);
                alpha_i.resize(n);
                Vec alpha;
                for (long a : alpha_i) alpha.push_back(Felt{static_cast<std::uint32_t>(a)});
                const std::size_t k = 1 + rng() % (n - 1);

                const auto want = oracle::k_sums(alpha_i, k, p);
                for (const auto& bits : {kernels::subset_sums(f, alpha, k), kernels::subset_sums_serial(f, alpha, k),
                                         kernels::subset_sums_dp(f, alpha, k)}) {
                    std::set<long> got;
                    for (std::size_t x = 0; x < bits.size(); ++x) {
                        if (bits[x]) got.insert(static_cast<long>(x));
                    }
                    CHECK(got == want);
                }
            }
        }
    }

    TEST_CASE("helpers") {
        const FieldSpec f = FieldSpec::make(5);
        CHECK(kernels::message_from_index(f, 7, 3) == Vec{Felt{0}, Felt{1}, Felt{2}});
        CHECK(kernels::saturating_pow(5, 3) == 125);
        CHECK(kernels::saturating_pow(37, 40) == UINT64_MAX);
    }
}
