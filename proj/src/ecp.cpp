#include "ecpkit/ecp.hpp"

#include <array>
#include <exception>
#include <sstream>

#include "ecpkit/construct.hpp"
#include "ecpkit/error.hpp"
#include "ecpkit/kernels.hpp"

namespace ecpkit {

namespace {

constexpr std::array<CaseRow, 6> kARows{{
    {'A', 1, 1, 0},
    {'A', 2, 2, 1},
    {'A', 3, 1, 1},
    {'A', 4, 3, 2},
    {'A', 5, 2, 2},
    {'A', 6, 1, 2},
}};

constexpr std::array<CaseRow, 10> kDRows{{
    {'D', 1, 1, 0},
    {'D', 2, 2, 1},
    {'D', 3, 1, 1},
    {'D', 4, 3, 2},
    {'D', 5, 2, 2},
    {'D', 6, 1, 2},
    {'D', 7, 4, 3},
    {'D', 8, 3, 3},
    {'D', 9, 2, 3},
    {'D', 10, 1, 3},
}};

void check_triple(const LinearCode& a, const LinearCode& b, const LinearCode& c) {
    for (const LinearCode* x : {&b, &c}) {
        if (!(x->field() == a.field())) throw Error(Errc::FieldMismatch, "codes over different fields");
        if (x->length() != a.length()) throw Error(Errc::LengthMismatch, "codes of different lengths");
    }
}

std::string join_vec(std::span<const Felt> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i].value);
    }
    return s;
}

std::string join_idx(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::span<const CaseRow> case_rows(char family) {
    if (family == 'A') return kARows;
    if (family == 'D') return kDRows;
    throw Error(Errc::InvalidSpec, std::string("unknown case family ") + family);
}

std::string CaseLabel::to_string() const {
    return std::string(1, family) + "." + std::to_string(index);
}

std::optional<CaseLabel> case_label(std::size_t n, std::size_t ell, const Params& a, std::size_t dC) {
    char family = 0;
    if (dC == 2 * ell + 1) {
        family = 'A';
    } else if (dC == 2 * ell + 2) {
        family = 'D';
    } else {
        throw Error(Errc::BadDistance, "d(C) = " + std::to_string(dC) + " is neither 2l+1 nor 2l+2 for l = " +
                                           std::to_string(ell));
    }
    if (a.n != n) return std::nullopt;
    for (const CaseRow& row : case_rows(family)) {
        const long long k = static_cast<long long>(ell) + row.dk;
        const long long d = static_cast<long long>(n) - static_cast<long long>(ell) - row.dd;
        if (static_cast<long long>(a.k) == k && static_cast<long long>(a.d) == d) return CaseLabel{family, row.index};
    }
    return std::nullopt;
}

EcpReport ecp_verify(const LinearCode& a, const LinearCode& b, const LinearCode& c, std::size_t ell,
                     DistanceOptions opts) {
    check_triple(a, b, c);
    const std::size_t n = a.length();
    if (ell < 1 || ell >= n) throw Error(Errc::PreconditionFailed, "error count must satisfy 1 <= l < n");

    EcpReport r;
    r.ell = ell;
    r.n = n;
    r.c_class = classify(c, opts);
    r.a = params(a, opts);
    r.b = params(b, opts);
    r.c = params(c, opts);
    if (b.dimension() < n) {
        const LinearCode bd = dual(b);
        r.b_dual = params(bd, opts);
        r.d_b_dual = r.b_dual->d;
    } else {
        r.d_b_dual = n + 1;
    }
    const LinearCode prod = schur_product(a, b);
    r.prod = params(prod, opts);
    r.product = product_report(a, b, prod, opts);

    r.e1 = product_in_dual(a, b, c);
    r.e2 = r.d_b_dual > ell;
    r.e3 = r.a.k > ell;
    r.e4 = r.a.d + r.c.d > n;

    if (r.c_class.tag == CodeTag::NMDS && (r.c.d == 2 * ell + 1 || r.c.d == 2 * ell + 2)) {
        r.case_label = case_label(n, ell, r.a, r.c.d);
    }
    return r;
}

std::string EcpReport::to_text() const {
    std::ostringstream os;
    os << "ell: " << ell << '\n'
       << "C: " << c.to_string() << ' ' << to_string(c_class.tag) << " d_dual=" << c_class.d_dual << '\n'
       << "A: " << a.to_string() << '\n'
       << "B: " << b.to_string() << '\n'
       << "B_dual: " << (b_dual ? b_dual->to_string() : std::string("zero")) << '\n'
       << "A*B: " << prod.to_string() << '\n'
       << "E1 A*B in C_dual: " << yes_no(e1) << '\n'
       << "E2 d(B_dual)=" << d_b_dual << " > " << ell << ": " << yes_no(e2) << '\n'
       << "E3 k(A)=" << a.k << " > " << ell << ": " << yes_no(e3) << '\n'
       << "E4 d(A)+d(C)=" << a.d + c.d << " > " << n << ": " << yes_no(e4) << '\n'
       << "psb: " << product.psb << '\n'
       << "pmds: " << yes_no(product.is_pmds) << '\n'
       << "fullsupp_bound: " << to_string(product.fullsupp_bound) << '\n'
       << "case: " << (case_label ? case_label->to_string() : std::string("none")) << '\n'
       << "ecp: " << yes_no(is_ecp()) << '\n';
    return os.str();
}

std::string EcpReport::to_record() const {
    std::ostringstream os;
    os << "ell=" << ell << " C=" << c.to_string() << " class=" << to_string(c_class.tag)
       << " d_dual=" << c_class.d_dual << " A=" << a.to_string() << " B=" << b.to_string()
       << " B_dual=" << (b_dual ? b_dual->to_string() : std::string("zero")) << " AB=" << prod.to_string()
       << " e1=" << e1 << " e2=" << e2 << " d_b_dual=" << d_b_dual << " e3=" << e3 << " e4=" << e4
       << " psb=" << product.psb << " pmds=" << product.is_pmds
       << " case=" << (case_label ? case_label->to_string() : std::string("none")) << " ecp=" << is_ecp();
    return os.str();
}

std::string to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Decoded: return "Decoded";
        case DecodeStatus::Fail_NoLocator: return "Fail_NoLocator";
        case DecodeStatus::Fail_ErasureUnsolvable: return "Fail_ErasureUnsolvable";
        case DecodeStatus::Fail_WeightExceeded: return "Fail_WeightExceeded";
    }
    return "Fail_NoLocator";
}

std::string DecodeResult::to_text() const {
    std::ostringstream os;
    os << "status: " << to_string(status) << '\n';
    if (codeword) os << "codeword: " << join_vec(*codeword) << '\n';
    if (error) os << "error: " << join_vec(*error) << "\nerror_weight: " << vec_weight(*error) << '\n';
    if (locator_zeroset) os << "locator_zeroset: " << join_idx(*locator_zeroset) << '\n';
    if (tie) os << "tie: yes\n";
    return os.str();
}

std::string DecodeResult::to_record() const {
    std::ostringstream os;
    os << "status=" << to_string(status);
    if (codeword) os << " codeword=" << join_vec(*codeword);
    if (error) os << " error=" << join_vec(*error) << " error_weight=" << vec_weight(*error);
    if (locator_zeroset) os << " locator_zeroset=" << join_idx(*locator_zeroset);
    if (tie) os << " tie=1";
    return os.str();
}

EcpDecoder::EcpDecoder(LinearCode a, LinearCode b, LinearCode c, std::size_t ell, DistanceOptions opts)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), ell_(ell), h_(parity_check(c_)),
      report_(ecp_verify(a_, b_, c_, ell, opts)) {
    if (!report_.is_ecp()) {
        throw Error(Errc::PreconditionFailed, "(A, B) is not an " + std::to_string(ell) + "-error-correcting pair for C");
    }
}

DecodeResult EcpDecoder::decode(std::span<const Felt> y) const {
    const FieldSpec& f = c_.field();
    const std::size_t n = c_.length();
    if (y.size() != n) throw Error(Errc::LengthMismatch, "received word length differs from code length");
    for (Felt x : y) {
        if (!f.valid(x)) throw Error(Errc::InvalidSpec, "received symbol outside the field");
    }

    // Locator space: messages x with sum_i x_i ((g_A,i * y) . g_B,r) = 0 for every r.
    const Mat& ga = a_.generator();
    const Mat& gb = b_.generator();
    Mat m(f, gb.rows(), ga.rows());
    Vec ay(n);
    for (std::size_t i = 0; i < ga.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) ay[j] = f.mul(ga(i, j), y[j]);
        for (std::size_t r = 0; r < gb.rows(); ++r) m(r, i) = vec_dot(f, ay, gb.row(r));
    }
    const Mat locators = kernel(m);

    DecodeResult out;
    if (locators.rows() == 0) {
        out.status = DecodeStatus::Fail_NoLocator;
        return out;
    }

    Vec syndrome(h_.rows());
    for (std::size_t i = 0; i < h_.rows(); ++i) syndrome[i] = vec_dot(f, h_.row(i), y);

    bool heavy = false;
    for (std::size_t r = 0; r < locators.rows(); ++r) {
        const Vec a = vec_mat(locators.row(r), ga);
        std::vector<std::size_t> zeros;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[j].value == 0) zeros.push_back(j);
        }
        const SolveResult sol = solve(h_.select_columns(zeros), syndrome);
        if (sol.status != SolveStatus::Unique) continue;
        Vec e(n, f.zero());
        for (std::size_t t = 0; t < zeros.size(); ++t) e[zeros[t]] = sol.x[t];
        if (vec_weight(e) > ell_) {
            heavy = true;
            continue;
        }
        out.status = DecodeStatus::Decoded;
        out.codeword = vec_sub(f, y, e);
        out.error = std::move(e);
        out.locator_zeroset = std::move(zeros);
        return out;
    }
    out.status = heavy ? DecodeStatus::Fail_WeightExceeded : DecodeStatus::Fail_ErasureUnsolvable;
    return out;
}

DecodeResult ecp_decode(const LinearCode& a, const LinearCode& b, const LinearCode& c, std::span<const Felt> y,
                        std::size_t ell, DistanceOptions opts) {
    return EcpDecoder(a, b, c, ell, opts).decode(y);
}

DecodeResult nearest_codeword_oracle(const LinearCode& c, std::span<const Felt> y, DistanceOptions opts) {
    const FieldSpec& f = c.field();
    if (y.size() != c.length()) throw Error(Errc::LengthMismatch, "received word length differs from code length");
    if (kernels::saturating_pow(f.q(), c.dimension()) > opts.budget) {
        throw Error(Errc::TooLarge, "q^k exceeds the enumeration budget");
    }
    const kernels::NearestHit hit = kernels::nearest_scan(c.generator(), y);
    DecodeResult out;
    out.status = DecodeStatus::Decoded;
    out.codeword = encode(c, kernels::message_from_index(f, hit.message_index, c.dimension()));
    out.error = vec_sub(f, y, *out.codeword);
    out.tie = hit.count_at_min > 1;
    return out;
}

GrsFamily::GrsFamily(const FieldSpec& field, const Vec& alpha) : alpha_(alpha) {
    const std::size_t n = alpha.size();
    for (std::size_t a = 1; a < n; ++a) {
        LinearCode g = grs(GrsSpec{field, alpha, {}, a});
        g.remember_distance(n - a + 1);
        LinearCode gd = dual(g);
        gd.remember_distance(a + 1);
        members_.push_back(Candidate{"GRS_" + std::to_string(a), g, a + 1});
        members_.push_back(Candidate{"GRS_" + std::to_string(a) + "^perp", gd, n - a + 1});
    }
}

std::vector<EcpWitness> ecp_search(const LinearCode& c, std::size_t ell, const Vec& alpha, const SearchOptions& opts) {
    return ecp_search(c, ell, GrsFamily(c.field(), alpha), opts);
}

std::vector<EcpWitness> ecp_search(const LinearCode& c, std::size_t ell, const GrsFamily& family,
                                   const SearchOptions& opts) {
    const std::size_t n = c.length();
    if (family.alpha().size() != n) throw Error(Errc::LengthMismatch, "evaluation sequence length differs from n");
    if (ell < 1 || ell >= n) throw Error(Errc::PreconditionFailed, "error count must satisfy 1 <= l < n");
    if (c.dimension() == n) return {};
    const std::size_t dC = min_distance(c, opts.dist);

    std::vector<const Candidate*> as;
    for (const auto& m : family.members()) as.push_back(&m);
    for (const auto& m : opts.extra_a) as.push_back(&m);

    std::vector<std::vector<EcpWitness>> found(as.size());
    std::vector<std::exception_ptr> failures(as.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(as.size()); ++idx) {
        const auto i = static_cast<std::size_t>(idx);
        try {
            const Candidate& ca = *as[i];
            const LinearCode& a = ca.code;
            if (a.dimension() <= ell) continue;
            if (min_distance(a, opts.dist) + dC <= n) continue;
            const LinearCode ac = schur_product(a, c);
            if (ac.dimension() == n) continue;  // only the zero code is orthogonal to A*C
            // Any admissible B lies in (A*C) dual, so d(B dual) <= d(A*C).
            if (min_distance(ac, opts.dist) <= ell) continue;
            const LinearCode bstar = dual(ac);

            bool bstar_in_family = false;
            for (const auto& cb : family.members()) {
                if (cb.d_dual <= ell) continue;
                if (cb.code == bstar) bstar_in_family = true;
                if (!rows_in_code(cb.code.generator(), bstar)) continue;
                EcpReport rep = ecp_verify(a, cb.code, c, ell, opts.dist);
                if (rep.is_ecp()) found[i].push_back(EcpWitness{ca.label, cb.label, a, cb.code, std::move(rep)});
            }
            if (opts.include_maximal_b && !bstar_in_family) {
                EcpReport rep = ecp_verify(a, bstar, c, ell, opts.dist);
                if (rep.is_ecp()) found[i].push_back(EcpWitness{ca.label, "(A*C)^perp", a, bstar, std::move(rep)});
            }
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }

    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    std::vector<EcpWitness> out;
    for (auto& v : found) {
        for (auto& w : v) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace ecpkit
