#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ecpkit/construct.hpp"
#include "ecpkit/ecp.hpp"
#include "ecpkit/theorems.hpp"

namespace ecpkit {

// ---- Worked examples over F_37 with alpha = (0, ..., 9) and eta = 6 ----

enum class ExampleId { Ex3_1, Ex4_1a, Ex4_1b };

std::string to_string(ExampleId id);
std::optional<ExampleId> parse_example_id(const std::string& s);
const std::vector<ExampleId>& all_examples();

struct ExampleTriple {
    LinearCode a;
    LinearCode b;
    LinearCode c;
    std::size_t ell;
    Vec alpha;
};

/// C is the (+)-twisted code, A is given by a Vandermonde parity-check
/// matrix and B by a Vandermonde generator matrix.
ExampleTriple example_triple(ExampleId id);

/// Verifies the example and checks its expected parameters; throws
/// InvariantViolated with an expected-vs-computed diff on any mismatch.
EcpReport run_example(ExampleId id, DistanceOptions opts = {});

// ---- Theorem consequences ----

enum class Verdict { Consistent, Violated, Vacuous };

std::string to_string(Verdict v);

struct TheoremCheck {
    std::string id;
    bool applicable = false;
    Verdict verdict = Verdict::Vacuous;
    std::string detail;
    std::optional<int> matched_possibility;  // 1-based, in listed order

    std::string to_text() const;
    std::string to_record() const;
};

/// One check per theorem id. Hypotheses (class and parameters of C, range
/// of ell, shape of A, support of A, d(B dual)) are matched strictly;
/// anything that does not match is Vacuous. `alpha` is the evaluation
/// sequence used for the GRS-structure conclusion; without it that part is
/// reported as unverifiable. Throws PreconditionFailed unless (A, B) is an
/// ell-ECP for C.
std::vector<TheoremCheck> theorem_consequences(const LinearCode& a, const LinearCode& b, const LinearCode& c,
                                               std::size_t ell, const std::optional<Vec>& alpha = std::nullopt,
                                               DistanceOptions opts = {});

// ---- Nonexistence sweeps ----

enum class SearchFamily { A2, A4, D4, D7 };

std::string to_string(SearchFamily f);
std::optional<SearchFamily> parse_search_family(const std::string& s);

struct SearchReport {
    std::string family;
    std::string space;
    std::size_t instances = 0;
    std::size_t pairs = 0;
    std::size_t witnesses = 0;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> details;  // one line per witness
    std::vector<std::string> notes;

    std::string to_text() const;
    std::string to_record() const;
};

/// Sweeps NMDS (+)-twisted codes C with d(C) = 2 ell + 1 (A2, A4) or
/// 2 ell + 2 (D4, D7) over F_q for n in [n_min, n_max] and looks for an
/// ell-ECP whose A has the excluded parameters. Each n uses alpha = (0..n-1)
/// plus two seeded random evaluation sequences, and every eta making C NMDS.
SearchReport negative_search(SearchFamily family, unsigned q, std::size_t n_min, std::size_t n_max,
                             std::uint64_t seed, DistanceOptions opts = {});

// ---- Seeded helpers ----

/// Uniform value in [0, bound) from the raw 64-bit stream, identical on
/// every platform.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);
/// n distinct field elements in random order.
Vec random_points(const FieldSpec& f, std::size_t n, std::mt19937_64& rng);
Vec random_nonzero(const FieldSpec& f, std::size_t n, std::mt19937_64& rng);
Vec iota_points(const FieldSpec& f, std::size_t n);

}  // namespace ecpkit
