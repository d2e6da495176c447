#include <doctest.h>

#include <algorithm>

#include "ecpkit/construct.hpp"
#include "ecpkit/ecp.hpp"
#include "ecpkit/error.hpp"
#include "ecpkit/harness.hpp"
#include "oracle.hpp"

using namespace ecpkit;

namespace {

Vec random_error(const FieldSpec& f, std::size_t n, std::size_t weight, std::mt19937_64& rng) {
    Vec e(n, Felt{0});
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    for (std::size_t i = 0; i < weight; ++i) e[pos[i]] = Felt{static_cast<std::uint32_t>(1 + rng() % (f.q() - 1))};
    return e;
}

}  // namespace

TEST_SUITE("ecp") {
    TEST_CASE("case labels") {
        CHECK(case_rows('A').size() == 6);
        CHECK(case_rows('D').size() == 10);
        // ell = 3, n = 10, d(C) = 7 = 2 ell + 1, A = [10,4,7] = [n, ell+1, n-ell].
        const auto a1 = case_label(10, 3, Params{10, 4, 7}, 7);
        REQUIRE(a1.has_value());
        CHECK(a1->to_string() == "A.1");
        const auto d7 = case_label(12, 2, Params{12, 6, 7}, 6);
        REQUIRE(d7.has_value());
        CHECK(d7->to_string() == "D.7");
        CHECK_FALSE(case_label(10, 3, Params{10, 9, 1}, 7).has_value());
        CHECK_THROWS_AS(case_label(10, 3, Params{10, 4, 7}, 9), Error);
    }

    TEST_CASE("worked examples verify as pairs") {
        for (ExampleId id : all_examples()) {
            const ExampleTriple t = example_triple(id);
            const EcpReport r = ecp_verify(t.a, t.b, t.c, t.ell);
            CHECK(r.e1);
            CHECK(r.e2);
            CHECK(r.e3);
            CHECK(r.e4);
            CHECK(r.is_ecp());
            CHECK(r.c_class.tag == CodeTag::NMDS);
        }
        const ExampleTriple t = example_triple(ExampleId::Ex3_1);
        const EcpReport r = ecp_verify(t.a, t.b, t.c, 3);
        CHECK(r.c == Params{10, 3, 7});
        CHECK(r.a == Params{10, 4, 7});
        CHECK(r.b_dual == Params{10, 7, 4});
        CHECK(r.prod == Params{10, 6, 5});
        CHECK(r.product.is_pmds);
        CHECK(r.case_label == CaseLabel{'A', 1});
        // Asking for one error too many breaks the B condition.
        CHECK_FALSE(ecp_verify(t.a, t.b, t.c, 4).is_ecp());
    }

    TEST_CASE("decoder corrects random errors and agrees with the nearest codeword") {
        std::mt19937_64 rng(61);
        for (ExampleId id : all_examples()) {
            const ExampleTriple t = example_triple(id);
            const EcpDecoder dec(t.a, t.b, t.c, t.ell);
            const FieldSpec& f = t.c.field();
            for (int trial = 0; trial < 60; ++trial) {
                Vec msg(t.c.dimension());
                for (auto& x : msg) x = Felt{static_cast<std::uint32_t>(rng() % f.q())};
                const Vec cw = encode(t.c, msg);
                const std::size_t w = rng() % (t.ell + 1);
                const Vec e = random_error(f, cw.size(), w, rng);
                const Vec y = vec_add(f, cw, e);
                const DecodeResult r = dec.decode(y);
                REQUIRE(r.status == DecodeStatus::Decoded);
                CHECK(*r.codeword == cw);
                CHECK(*r.error == e);
                const DecodeResult o = nearest_codeword_oracle(t.c, y);
                CHECK(*o.codeword == cw);
                CHECK_FALSE(o.tie);
            }
        }
    }

    TEST_CASE("decoder never returns a wrong codeword of weight within range") {
        std::mt19937_64 rng(62);
        const ExampleTriple t = example_triple(ExampleId::Ex4_1b);
        const EcpDecoder dec(t.a, t.b, t.c, t.ell);
        const FieldSpec& f = t.c.field();
        for (int trial = 0; trial < 100; ++trial) {
            Vec y(10);
            for (auto& x : y) x = Felt{static_cast<std::uint32_t>(rng() % 37)};
            const DecodeResult r = dec.decode(y);
            if (r.status != DecodeStatus::Decoded) continue;
            CHECK(vec_weight(vec_sub(f, y, *r.codeword)) <= t.ell);
            CHECK(rows_in_code(Mat::from_rows(f, {*r.codeword}), t.c));
        }
    }

    TEST_CASE("pair search on the first example finds its pair") {
        const ExampleTriple t = example_triple(ExampleId::Ex3_1);
        const auto found = ecp_search(t.c, 3, t.alpha);
        CHECK_FALSE(found.empty());
        const bool has_example =
            std::any_of(found.begin(), found.end(), [&](const EcpWitness& w) { return w.a == t.a && w.b == t.b; });
        CHECK(has_example);
        for (const auto& w : found) {
            CHECK(w.report.is_ecp());
            CHECK(w.report.case_label.has_value());
        }
    }

    TEST_CASE("maximal B is an error-correcting pair whenever any B is") {
        // For every A of the family, B* = (A*C) dual contains every admissible B.
        const ExampleTriple t = example_triple(ExampleId::Ex4_1a);
        SearchOptions without;
        without.include_maximal_b = false;
        const auto plain = ecp_search(t.c, 2, t.alpha, without);
        const auto full = ecp_search(t.c, 2, t.alpha);
        CHECK(full.size() >= plain.size());
        for (const auto& w : plain) {
            const LinearCode bstar = dual(schur_product(w.a, t.c));
            CHECK(is_subcode(w.b, bstar));
            CHECK(ecp_verify(w.a, bstar, t.c, 2).is_ecp());
        }
    }

    TEST_CASE("oracle and decoder errors") {
        const ExampleTriple t = example_triple(ExampleId::Ex3_1);
        CHECK_THROWS_AS(EcpDecoder(t.a, t.b, t.c, 4), Error);
        const EcpDecoder dec(t.a, t.b, t.c, 3);
        CHECK_THROWS_AS(dec.decode(Vec(9, Felt{0})), Error);
        CHECK_THROWS_AS(ecp_verify(t.a, t.b, t.c, 0), Error);
        CHECK_THROWS_AS(nearest_codeword_oracle(t.c, Vec(10, Felt{0}), {DistanceStrategy::Auto, 100}), Error);
        CHECK(to_string(DecodeStatus::Fail_WeightExceeded) == "Fail_WeightExceeded");
    }
}
