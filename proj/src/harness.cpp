#include "ecpkit/harness.hpp"

#include <chrono>
#include <exception>
#include <sstream>

#include "ecpkit/error.hpp"

namespace ecpkit {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

Vec iota_points(const FieldSpec& f, std::size_t n) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f.element(i);
    return v;
}

Vec random_points(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    if (n > f.q()) throw Error(Errc::InvalidSpec, "more points requested than field elements");
    Vec pool = f.elements();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(draw_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(n);
    return pool;
}

Vec random_nonzero(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    Vec v(n);
    for (auto& x : v) x = Felt{static_cast<std::uint32_t>(1 + draw_below(rng, f.q() - 1))};
    return v;
}

// ---------------------------------------------------------------------------
// Examples

std::string to_string(ExampleId id) {
    switch (id) {
        case ExampleId::Ex3_1: return "ex3.1";
        case ExampleId::Ex4_1a: return "ex4.1a";
        case ExampleId::Ex4_1b: return "ex4.1b";
    }
    return "ex3.1";
}

std::optional<ExampleId> parse_example_id(const std::string& s) {
    for (ExampleId id : all_examples()) {
        if (to_string(id) == s) return id;
    }
    return std::nullopt;
}

const std::vector<ExampleId>& all_examples() {
    static const std::vector<ExampleId> ids{ExampleId::Ex3_1, ExampleId::Ex4_1a, ExampleId::Ex4_1b};
    return ids;
}

ExampleTriple example_triple(ExampleId id) {
    const FieldSpec f = FieldSpec::make(37);
    const Vec alpha = iota_points(f, 10);
    const Felt eta = f.element(6);

    std::size_t k_c = 4;
    std::size_t parity_rows = 6;
    std::size_t b_rows = 3;
    std::size_t ell = 2;
    switch (id) {
        case ExampleId::Ex3_1:
            k_c = 3;
            ell = 3;
            break;
        case ExampleId::Ex4_1a:
            parity_rows = 7;
            break;
        case ExampleId::Ex4_1b:
            b_rows = 2;
            break;
    }

    const LinearCode c = tgrs(TgrsSpec::plus(GrsSpec{f, alpha, {}, k_c}, eta));
    const LinearCode a = code_from_generator(f, kernel(grs_rows(GrsSpec{f, alpha, {}, parity_rows})));
    const LinearCode b = grs(GrsSpec{f, alpha, {}, b_rows});
    return ExampleTriple{a, b, c, ell, alpha};
}

EcpReport run_example(ExampleId id, DistanceOptions opts) {
    const ExampleTriple t = example_triple(id);
    const EcpReport r = ecp_verify(t.a, t.b, t.c, t.ell, opts);

    Params want_c{10, 4, 6};
    Params want_a{10, 4, 7};
    CaseLabel want_case{'D', 2};
    switch (id) {
        case ExampleId::Ex3_1:
            want_c = {10, 3, 7};
            want_case = {'A', 1};
            break;
        case ExampleId::Ex4_1a:
            want_a = {10, 3, 8};
            want_case = {'D', 1};
            break;
        case ExampleId::Ex4_1b: break;
    }

    std::string diff;
    auto expect = [&diff](const std::string& what, const std::string& want, const std::string& got) {
        if (want != got) diff += "  " + what + ": expected " + want + ", computed " + got + "\n";
    };
    expect("C", want_c.to_string(), r.c.to_string());
    expect("class of C", "NMDS", to_string(r.c_class.tag));
    expect("A", want_a.to_string(), r.a.to_string());
    expect("is_ecp", "yes", r.is_ecp() ? "yes" : "no");
    expect("case", want_case.to_string(), r.case_label ? r.case_label->to_string() : "none");
    if (!diff.empty()) throw Error(Errc::InvariantViolated, to_string(id) + " mismatch\n" + diff);
    return r;
}

// ---------------------------------------------------------------------------
// Theorem consequences

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "Consistent";
        case Verdict::Violated: return "Violated";
        case Verdict::Vacuous: return "Vacuous";
    }
    return "Vacuous";
}

std::string TheoremCheck::to_text() const {
    std::string out = id + ": " + to_string(verdict);
    if (matched_possibility) out += " (possibility " + std::to_string(*matched_possibility) + ")";
    if (!detail.empty()) out += " - " + detail;
    return out;
}

std::string TheoremCheck::to_record() const {
    std::string out = "id=" + id + " applicable=" + (applicable ? "1" : "0") + " verdict=" + to_string(verdict);
    out += " matched=" + (matched_possibility ? std::to_string(*matched_possibility) : std::string("none"));
    out += " detail=\"" + detail + "\"";
    return out;
}

namespace {

struct Facts {
    std::size_t n = 0;
    std::size_t ell = 0;
    CodeClass c_class;
    Params a;
    Params c;
    bool a_full = false;
    std::optional<Params> b_dual;
    std::size_t d_b_dual = 0;
    Params prod;
    bool prod_is_c_dual = false;
};

// Empty string when every hypothesis of the row holds; otherwise the first
// one that fails.
std::string failed_hypothesis(const TheoremRow& row, const Facts& x) {
    if (x.c_class.tag != row.c_tag) return "C is " + to_string(x.c_class.tag) + ", not " + to_string(row.c_tag);
    if (!row.c.matches(x.c, x.ell)) return "C=" + x.c.to_string() + " is not " + row.c.render();
    if (!row.range.contains(x.n, x.ell)) {
        return "ℓ=" + std::to_string(x.ell) + ", n=" + std::to_string(x.n) + " outside " + row.range.render();
    }
    if (!row.a.matches(x.a, x.ell)) return "A=" + x.a.to_string() + " is not " + row.a.render();
    if (row.a_full && !x.a_full) return "A is not full-support";
    if (row.needs_b_dual_above_ell_plus_one && x.d_b_dual <= x.ell + 1) {
        return "d(B⊥)=" + std::to_string(x.d_b_dual) + " is not above ℓ+1";
    }
    return {};
}

std::string facts_line(const Facts& x) {
    std::string s = "B⊥=" + (x.b_dual ? x.b_dual->to_string() : std::string("zero"));
    s += " A∗B=" + x.prod.to_string();
    s += std::string(" A∗B=C⊥:") + (x.prod_is_c_dual ? "yes" : "no");
    return s;
}

}  // namespace

std::vector<TheoremCheck> theorem_consequences(const LinearCode& a, const LinearCode& b, const LinearCode& c,
                                               std::size_t ell, const std::optional<Vec>& alpha,
                                               DistanceOptions opts) {
    const EcpReport rep = ecp_verify(a, b, c, ell, opts);
    if (!rep.is_ecp()) {
        throw Error(Errc::PreconditionFailed, "(A, B) is not an " + std::to_string(ell) + "-error-correcting pair");
    }

    Facts x;
    x.n = c.length();
    x.ell = ell;
    x.c_class = rep.c_class;
    x.a = rep.a;
    x.c = rep.c;
    x.a_full = support(a).full;
    x.b_dual = rep.b_dual;
    x.d_b_dual = rep.d_b_dual;
    x.prod = rep.prod;
    const LinearCode prod = schur_product(a, b);
    x.prod_is_c_dual = c.dimension() < c.length() && prod == dual(c);

    // Evaluated lazily: only T5.1-style rows need the structure test.
    std::optional<std::pair<bool, std::string>> structure;
    auto grs_structure = [&]() -> const std::pair<bool, std::string>& {
        if (structure) return *structure;
        const LinearCode ac = schur_product(a, c);
        const bool b_is_max = ac.dimension() < ac.length() && b == dual(ac);
        std::string note = std::string("B=(A∗C)⊥:") + (b_is_max ? "yes" : "no");
        bool ok = b_is_max;
        if (alpha) {
            const bool ga = grs_multiplier(a, *alpha).has_value();
            const bool gb = grs_multiplier(b, *alpha).has_value();
            const bool gc = grs_multiplier(c, *alpha).has_value();
            note += std::string(" GRS on α: A ") + (ga ? "yes" : "no") + ", B " + (gb ? "yes" : "no") + ", C " +
                    (gc ? "yes" : "no");
            ok = ok && ga && gb && gc;
        } else {
            note += " GRS on α: unverifiable (no evaluation sequence given)";
        }
        structure.emplace(ok, note);
        return *structure;
    };

    std::vector<TheoremCheck> out;
    for (const std::string& id : theorem_ids()) {
        TheoremCheck chk;
        chk.id = id;
        const TheoremRow* hit = nullptr;
        std::string why;
        for (const auto& row : theorem_rows()) {
            if (row.id != id) continue;
            const std::string f = failed_hypothesis(row, x);
            if (f.empty()) {
                hit = &row;
                break;
            }
            if (why.empty()) why = f;
        }
        if (!hit) {
            chk.detail = "hypotheses not met: " + why;
            out.push_back(std::move(chk));
            continue;
        }

        chk.applicable = true;
        std::string detail = facts_line(x);
        for (std::size_t i = 0; i < hit->outcomes.size() && !chk.matched_possibility; ++i) {
            const Outcome& o = hit->outcomes[i];
            bool ok = false;
            switch (o.kind) {
                case Outcome::Kind::SmallCode:
                    ok = (x.n % 2 == 1) == o.n_odd && x.c == Params{x.n, 2, x.n - 2};
                    break;
                case Outcome::Kind::GrsStructure: {
                    const auto& s = grs_structure();
                    ok = s.first;
                    detail += " " + s.second;
                    break;
                }
                case Outcome::Kind::Split:
                    ok = x.b_dual && o.b_dual->matches(*x.b_dual, ell);
                    if (o.prod == Outcome::Prod::CDual) ok = ok && x.prod_is_c_dual;
                    if (o.prod == Outcome::Prod::Shape) ok = ok && o.prod_shape.matches(x.prod, ell);
                    break;
            }
            if (ok) chk.matched_possibility = static_cast<int>(i + 1);
        }
        chk.verdict = chk.matched_possibility ? Verdict::Consistent : Verdict::Violated;
        chk.detail = detail;
        out.push_back(std::move(chk));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Negative searches

std::string to_string(SearchFamily f) {
    switch (f) {
        case SearchFamily::A2: return "A2";
        case SearchFamily::A4: return "A4";
        case SearchFamily::D4: return "D4";
        case SearchFamily::D7: return "D7";
    }
    return "A2";
}

std::optional<SearchFamily> parse_search_family(const std::string& s) {
    for (SearchFamily f : {SearchFamily::A2, SearchFamily::A4, SearchFamily::D4, SearchFamily::D7}) {
        if (to_string(f) == s) return f;
    }
    return std::nullopt;
}

std::string SearchReport::to_text() const {
    std::ostringstream os;
    os << "family: " << family << '\n'
       << "space: " << space << '\n'
       << "instances: " << instances << '\n'
       << "pairs_found: " << pairs << '\n'
       << "witnesses: " << witnesses << '\n'
       << "elapsed_s: " << elapsed_seconds << '\n'
       << "seed: " << seed << '\n';
    for (const auto& n : notes) os << "note: " << n << '\n';
    for (const auto& d : details) os << "witness: " << d << '\n';
    return os.str();
}

std::string SearchReport::to_record() const {
    std::ostringstream os;
    os << "family=" << family << " instances=" << instances << " pairs=" << pairs << " witnesses=" << witnesses
       << " elapsed_s=" << elapsed_seconds << " seed=" << seed;
    return os.str();
}

namespace {

struct FamilyShape {
    std::size_t d_extra;   // d(C) = 2 ell + d_extra
    int a_dk;              // forbidden A = [n, ell + a_dk, n - ell - a_dd]
    int a_dd;
    EllBound bound;
};

FamilyShape family_shape(SearchFamily f) {
    switch (f) {
        case SearchFamily::A2: return {1, 2, 1, EllBound::NMinusThreeHalf};
        case SearchFamily::A4: return {1, 3, 2, EllBound::NMinusThreeHalf};
        case SearchFamily::D4: return {2, 3, 2, EllBound::HalfMinusTwo};
        case SearchFamily::D7: return {2, 4, 3, EllBound::HalfMinusTwo};
    }
    return {1, 2, 1, EllBound::NMinusThreeHalf};
}

constexpr int kRandomCandidates = 4;

struct GridItem {
    std::size_t n;
    std::size_t ell;
    std::size_t seq;  // index into the evaluation sequences for this n
    Felt eta;
};

}  // namespace

SearchReport negative_search(SearchFamily family, unsigned q, std::size_t n_min, std::size_t n_max,
                             std::uint64_t seed, DistanceOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    const FieldSpec f = FieldSpec::make(q);
    const FamilyShape shape = family_shape(family);
    const EllRange range{2, shape.bound};

    SearchReport rep;
    rep.family = to_string(family);
    rep.seed = seed;
    {
        const ParamShape forbidden{Affine{0, 1, shape.a_dk}, Affine{1, -1, -shape.a_dd}};
        std::ostringstream sp;
        sp << "NMDS (+)-twisted C over F_" << q << ", n in [" << n_min << "," << n_max << "], d(C)=2ℓ+"
           << shape.d_extra << ", " << range.render() << ", 3 evaluation sequences per n, all η giving NMDS, A from the GRS family, (+)-twisted MDS codes and "
           << 3 * kRandomCandidates << " seeded random GRS/twisted codes per instance; "
           << "excluded A=" << forbidden.render();
        rep.space = sp.str();
    }
    if (family == SearchFamily::A2 || family == SearchFamily::A4) {
        rep.notes.push_back("statement range reads 2≤ℓ<n/2−1; the sweep uses the proof range 2≤ℓ<(n−3)/2");
    } else {
        rep.notes.push_back("statement range reads 2≤ℓ<(n−3)/2; the sweep uses the proof range 2≤ℓ<n/2−2");
    }
    if (n_max > q) n_max = q;

    // Evaluation sequences and their pair-search families, built serially so
    // the grid is fixed by the seed alone.
    std::mt19937_64 rng(seed);
    std::vector<std::vector<GrsFamily>> families(n_max + 1);
    std::vector<GridItem> grid;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        bool any_ell = false;
        for (std::size_t ell = 2; range.contains(n, ell); ++ell) any_ell = true;
        if (!any_ell) continue;
        std::vector<Vec> seqs{iota_points(f, n), random_points(f, n, rng), random_points(f, n, rng)};
        for (const Vec& alpha : seqs) families[n].emplace_back(f, alpha);

        for (std::size_t ell = 2; range.contains(n, ell); ++ell) {
            const std::size_t k = n - 2 * ell - shape.d_extra;
            for (std::size_t s = 0; s < seqs.size(); ++s) {
                const Vec sums = s_k_plus(f, seqs[s], k);
                for (std::uint32_t e = 1; e < q; ++e) {
                    const Felt eta{e};
                    if (std::binary_search(sums.begin(), sums.end(), f.neg(f.inv(eta)))) {
                        grid.push_back({n, ell, s, eta});
                    }
                }
            }
        }
    }

    if (grid.empty()) {
        rep.notes.push_back("no admissible (n, ℓ) in range: nothing to examine");
        rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }

    std::vector<std::size_t> pair_counts(grid.size(), 0);
    std::vector<std::vector<std::string>> hits(grid.size());
    std::vector<std::exception_ptr> failures(grid.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t gi = 0; gi < static_cast<std::int64_t>(grid.size()); ++gi) {
        const auto i = static_cast<std::size_t>(gi);
        try {
            const GridItem& it = grid[i];
            const GrsFamily& fam = families[it.n][it.seq];
            const Vec& alpha = fam.alpha();
            const std::size_t k = it.n - 2 * it.ell - shape.d_extra;
            const LinearCode c = tgrs(TgrsSpec::plus(GrsSpec{f, alpha, {}, k}, it.eta));
            const CodeClass cls = classify(c, opts);
            if (cls.tag != CodeTag::NMDS || cls.d != 2 * it.ell + shape.d_extra) {
                throw Error(Errc::InvariantViolated, "predicted NMDS code classified as " + to_string(cls.tag) +
                                                         " [" + std::to_string(it.n) + "," + std::to_string(k) +
                                                         "," + std::to_string(cls.d) + "]");
            }

            const std::size_t k_forbidden = it.ell + static_cast<std::size_t>(shape.a_dk);
            const Params forbidden{it.n, k_forbidden, it.n - it.ell - static_cast<std::size_t>(shape.a_dd)};

            SearchOptions so;
            so.dist = opts;
            if (k_forbidden < it.n) {
                const Vec sums = s_k_plus(f, alpha, k_forbidden);
                for (std::uint32_t e = 1; e < q; ++e) {
                    const Felt eta{e};
                    if (std::binary_search(sums.begin(), sums.end(), f.neg(f.inv(eta)))) continue;
                    LinearCode a = tgrs(TgrsSpec::plus(GrsSpec{f, alpha, {}, k_forbidden}, eta));
                    so.extra_a.push_back(Candidate{"TGRS+_" + std::to_string(k_forbidden) + "(eta=" +
                                                       std::to_string(e) + ")",
                                                   a, 0});
                }
                // Codes unrelated to C's evaluation data: scaled columns,
                // other point sets, and twisted codes on other point sets.
                std::mt19937_64 local(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
                const std::string kf = std::to_string(k_forbidden);
                for (int r = 0; r < kRandomCandidates; ++r) {
                    const GrsSpec scaled{f, alpha, random_nonzero(f, it.n, local), k_forbidden};
                    so.extra_a.push_back(Candidate{"GRS_" + kf + "(alpha,v" + std::to_string(r) + ")", grs(scaled), 0});
                    const GrsSpec moved{f, random_points(f, it.n, local), {}, k_forbidden};
                    so.extra_a.push_back(Candidate{"GRS_" + kf + "(beta" + std::to_string(r) + ")", grs(moved), 0});
                    const Felt e{static_cast<std::uint32_t>(1 + draw_below(local, q - 1))};
                    const GrsSpec twisted{f, random_points(f, it.n, local), {}, k_forbidden};
                    so.extra_a.push_back(Candidate{"TGRS+_" + kf + "(beta" + std::to_string(r) + ",eta=" +
                                                       std::to_string(e.value) + ")",
                                                   tgrs(TgrsSpec::plus(twisted, e)), 0});
                }
            }

            const auto found = ecp_search(c, it.ell, fam, so);
            pair_counts[i] = found.size();
            for (const auto& w : found) {
                if (w.report.a == forbidden) {
                    std::ostringstream os;
                    os << "n=" << it.n << " ell=" << it.ell << " seq=" << it.seq << " eta=" << it.eta.value
                       << " A=" << w.a_label << ' ' << w.report.a.to_string() << " B=" << w.b_label << ' '
                       << w.report.b.to_string();
                    hits[i].push_back(os.str());
                }
            }
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (const auto& e : failures) {
        if (e) std::rethrow_exception(e);
    }

    rep.instances = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rep.pairs += pair_counts[i];
        rep.witnesses += hits[i].size();
        for (auto& h : hits[i]) rep.details.push_back(std::move(h));
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace ecpkit
