#include <doctest.h>

#include "ecpkit/error.hpp"
#include "ecpkit/gf.hpp"
#include "oracle.hpp"

using namespace ecpkit;

namespace {

std::vector<long> coeffs(const FieldSpec& f, Felt a) {
    std::vector<long> out;
    for (unsigned d : f.digits(a)) out.push_back(static_cast<long>(d));
    return out;
}

std::vector<long> modulus_of(const FieldSpec& f) {
    std::vector<long> out;
    for (unsigned c : f.modulus()) out.push_back(static_cast<long>(c));
    return out;
}

}  // namespace

TEST_SUITE("gf") {
    TEST_CASE("prime field arithmetic agrees with integers mod p") {
        for (unsigned p : {2u, 3u, 7u, 37u}) {
            const FieldSpec f = FieldSpec::make(p);
            CHECK(f.q() == p);
            for (unsigned a = 0; a < p; ++a) {
                for (unsigned b = 0; b < p; ++b) {
                    CHECK(f.add(Felt{a}, Felt{b}).value == (a + b) % p);
                    CHECK(f.mul(Felt{a}, Felt{b}).value == (a * b) % p);
                    CHECK(f.sub(Felt{a}, Felt{b}).value == static_cast<unsigned>(oracle::md(long(a) - long(b), p)));
                }
                if (a != 0) CHECK(f.inv(Felt{a}).value == static_cast<unsigned>(oracle::inv_mod(a, p)));
            }
        }
    }

    TEST_CASE("extension multiplication agrees with polynomial arithmetic") {
        for (auto [p, m] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
            const FieldSpec f = FieldSpec::make(p, m);
            const auto mod = modulus_of(f);
            CHECK(mod.size() == m + 1);
            CHECK(mod.back() == 1);
            for (Felt a : f.elements()) {
                for (Felt b : f.elements()) {
                    const auto want = oracle::poly_mulmod(coeffs(f, a), coeffs(f, b), mod, p);
                    CHECK(coeffs(f, f.mul(a, b)) == want);
                }
            }
        }
    }

    TEST_CASE("built-in moduli have no roots and match the irreducibility test") {
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            for (unsigned m : {2u, 3u}) {
                const auto mod = builtin_modulus(p, m);
                REQUIRE(mod.has_value());
                std::vector<long> c(mod->begin(), mod->end());
                for (long x = 0; x < long(p); ++x) CHECK(oracle::poly_eval(c, x, p) != 0);
                CHECK(is_irreducible(p, *mod));
            }
        }
        // x^2 + 1 = (x + 1)^2 over F_2
        CHECK_FALSE(is_irreducible(2, std::vector<unsigned>{1, 0, 1}));
    }

    TEST_CASE("primitive element generates the multiplicative group") {
        for (auto [p, m] : {std::pair{37u, 1u}, {13u, 1u}, {2u, 4u}, {3u, 2u}}) {
            const FieldSpec f = FieldSpec::make(p, m);
            const Felt g = f.primitive();
            std::set<std::uint32_t> seen;
            Felt x = f.one();
            for (std::uint32_t i = 0; i + 1 < f.q(); ++i) {
                seen.insert(x.value);
                x = f.mul(x, g);
            }
            CHECK(seen.size() == f.q() - 1);
            CHECK(x == f.one());
        }
    }

    TEST_CASE("powers, division and field_arith dispatch") {
        const FieldSpec f = FieldSpec::make(37);
        const Felt a{5};
        CHECK(f.mul(f.pow(a, -3), f.pow(a, 3)) == f.one());
        CHECK(f.pow(a, 36) == f.one());
        CHECK(f.pow(Felt{0}, 0) == f.one());
        CHECK(f.div(Felt{10}, Felt{5}) == Felt{2});
        CHECK(field_arith(f, ArithOp::Add, Felt{30}, 10) == Felt{3});
        CHECK(field_arith(f, ArithOp::Neg, Felt{1}) == Felt{36});
        CHECK(field_arith(f, ArithOp::Pow, Felt{2}, 5) == Felt{32});
        CHECK(f.from_int(-1) == Felt{36});
    }

    TEST_CASE("errors") {
        auto code_of = [](auto&& fn) {
            try {
                fn();
            } catch (const Error& e) {
                return e.code();
            }
            return Errc::InvariantViolated;
        };
        CHECK(code_of([] { FieldSpec::make(4); }) == Errc::NotPrime);
        CHECK(code_of([] { FieldSpec::make(2, 2, std::vector<unsigned>{1, 0, 1}); }) == Errc::NotIrreducible);
        CHECK(code_of([] { FieldSpec::make(2, 9); }) == Errc::UnsupportedDegree);
        const FieldSpec f = FieldSpec::make(7);
        CHECK(code_of([&] { f.inv(Felt{0}); }) == Errc::DivideByZero);
        CHECK(code_of([&] { f.div(Felt{3}, Felt{0}); }) == Errc::DivideByZero);
        CHECK(code_of([&] { f.pow(Felt{0}, -1); }) == Errc::DivideByZero);
        CHECK(code_of([&] { f.element(7); }) == Errc::InvalidSpec);
    }

    TEST_CASE("field line round trip") {
        for (auto [p, m] : {std::pair{37u, 1u}, {3u, 2u}, {2u, 4u}}) {
            const FieldSpec f = FieldSpec::make(p, m);
            const FieldSpec g = parse_field(f.to_string());
            CHECK(f == g);
            CHECK(g.to_string() == f.to_string());
        }
    }
}
