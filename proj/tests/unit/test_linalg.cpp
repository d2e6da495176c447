#include <doctest.h>

#include "ecpkit/linalg.hpp"
#include "oracle.hpp"

using namespace ecpkit;

TEST_SUITE("linalg") {
    TEST_CASE("rank and kernel against naive elimination") {
        std::mt19937_64 rng(11);
        for (long p : {2L, 3L, 5L, 13L}) {
            const FieldSpec f = FieldSpec::make(static_cast<unsigned>(p));
            for (int trial = 0; trial < 40; ++trial) {
                const std::size_t rows = 1 + rng() % 6;
                const std::size_t cols = 1 + rng() % 8;
                const auto im = oracle::random_imat(rows, cols, p, rng);
                const Mat m = oracle::from_imat(f, im, cols);
                const std::size_t r = oracle::rank(im, p);
                CHECK(rank(m) == r);

                const Mat k = kernel(m);
                CHECK(k.rows() == cols - r);
                if (k.rows() > 0) {
                    CHECK(mat_product(m, k.transpose()).is_zero());
                    CHECK(rank(k) == k.rows());
                }
            }
        }
    }

    TEST_CASE("rref is idempotent and keeps the row space") {
        std::mt19937_64 rng(12);
        const FieldSpec f = FieldSpec::make(7);
        for (int trial = 0; trial < 30; ++trial) {
            const auto im = oracle::random_imat(4, 6, 7, rng);
            const Mat m = oracle::from_imat(f, im, 6);
            const RrefResult a = rref(m);
            const RrefResult b = rref(a.reduced);
            CHECK(a.reduced == b.reduced);
            CHECK(a.pivots == b.pivots);
            CHECK(rowspace_equal(m, row_basis(m)));
            for (std::size_t i = 0; i < a.rank; ++i) {
                CHECK(a.reduced(i, a.pivots[i]) == f.one());
                for (std::size_t j = 0; j < a.rank; ++j) {
                    if (j != i) CHECK(a.reduced(j, a.pivots[i]) == f.zero());
                }
            }
        }
    }

    TEST_CASE("solve distinguishes the three outcomes") {
        const FieldSpec f = FieldSpec::make(5);
        const Mat m = Mat::from_rows(f, {{Felt{1}, Felt{2}}, {Felt{3}, Felt{4}}});
        const Vec rhs{Felt{1}, Felt{2}};
        const SolveResult s = solve(m, rhs);
        REQUIRE(s.status == SolveStatus::Unique);
        CHECK(vec_mat(s.x, m.transpose()) == rhs);

        const Mat sing = Mat::from_rows(f, {{Felt{1}, Felt{2}}, {Felt{2}, Felt{4}}});
        CHECK(solve(sing, Vec{Felt{1}, Felt{1}}).status == SolveStatus::Inconsistent);
        CHECK(solve(sing, Vec{Felt{1}, Felt{2}}).status == SolveStatus::Underdetermined);
    }

    TEST_CASE("reduce_against decides membership") {
        const FieldSpec f = FieldSpec::make(3);
        const Mat m = Mat::from_rows(f, {{Felt{1}, Felt{1}, Felt{0}}, {Felt{0}, Felt{1}, Felt{1}}});
        const RrefResult r = rref(m);
        const Vec inside{Felt{1}, Felt{2}, Felt{1}};
        const Vec outside{Felt{1}, Felt{0}, Felt{0}};
        CHECK(vec_weight(reduce_against(r.reduced, r.pivots, inside)) == 0);
        CHECK(vec_weight(reduce_against(r.reduced, r.pivots, outside)) != 0);
    }

    TEST_CASE("vector helpers") {
        const FieldSpec f = FieldSpec::make(7);
        const Vec a{Felt{1}, Felt{6}, Felt{3}};
        const Vec b{Felt{2}, Felt{2}, Felt{0}};
        CHECK(vec_add(f, a, b) == Vec{Felt{3}, Felt{1}, Felt{3}});
        CHECK(vec_sub(f, a, b) == Vec{Felt{6}, Felt{4}, Felt{3}});
        CHECK(vec_schur(f, a, b) == Vec{Felt{2}, Felt{5}, Felt{0}});
        CHECK(vec_dot(f, a, b) == Felt{0});
        CHECK(vec_scale(f, Felt{3}, a) == Vec{Felt{3}, Felt{4}, Felt{2}});
        CHECK(vec_weight(b) == 2);
        CHECK(to_text(Mat::from_rows(f, {a})) == "1 3\n1 6 3\n");
    }
}
