#include "ecpkit/theorems.hpp"

#include <set>
#include <sstream>

namespace ecpkit {

namespace {

constexpr const char* kMinus = "−";
constexpr const char* kEll = "ℓ";

Affine L(int coef, int c) { return Affine{0, coef, c}; }
Affine NL(int coef, int c) { return Affine{1, coef, c}; }
ParamShape shape(Affine k, Affine d) { return ParamShape{k, d}; }

Outcome small_code(bool n_odd) {
    Outcome o;
    o.kind = Outcome::Kind::SmallCode;
    o.n_odd = n_odd;
    return o;
}

Outcome split(ParamShape b_dual) {
    Outcome o;
    o.kind = Outcome::Kind::Split;
    o.b_dual = b_dual;
    return o;
}

Outcome split_cdual(ParamShape b_dual) {
    Outcome o = split(b_dual);
    o.prod = Outcome::Prod::CDual;
    return o;
}

Outcome split_prod(ParamShape b_dual, ParamShape prod) {
    Outcome o = split(b_dual);
    o.prod = Outcome::Prod::Shape;
    o.prod_shape = prod;
    return o;
}

Outcome grs_structure() {
    Outcome o;
    o.kind = Outcome::Kind::GrsStructure;
    return o;
}

std::vector<TheoremRow> build_rows() {
    const ParamShape c_mds_odd = shape(NL(-2, 0), L(2, 1));     // [n, n-2l, 2l+1]
    const ParamShape c_mds_even = shape(NL(-2, -1), L(2, 2));   // [n, n-2l-1, 2l+2]
    const ParamShape c_nmds_odd = shape(NL(-2, -1), L(2, 1));   // [n, n-2l-1, 2l+1]
    const ParamShape c_nmds_even = shape(NL(-2, -2), L(2, 2));  // [n, n-2l-2, 2l+2]
    const ParamShape bd_tight = shape(NL(-1, 0), L(1, 1));      // [n, n-l, l+1]
    const ParamShape bd_wide = shape(NL(-1, -1), L(1, 1));      // [n, n-l-1, l+1]

    const EllRange from1_half1{1, EllBound::HalfMinusOne};
    const EllRange half1{2, EllBound::HalfMinusOne};
    const EllRange n3{2, EllBound::NMinusThreeHalf};
    const EllRange half2{2, EllBound::HalfMinusTwo};

    std::vector<TheoremRow> rows;
    auto add = [&rows](TheoremRow r) { rows.push_back(std::move(r)); };

    // MDS C.
    add({1, "", from1_half1, CodeTag::MDS, c_mds_odd, shape(L(1, 1), NL(-1, 0)), std::nullopt, false, false,
         {grs_structure()}});
    add({1, "T5.1", half1, CodeTag::MDS, c_mds_even, shape(L(1, 2), NL(-1, -1)), std::nullopt, false, false,
         {grs_structure()}});
    add({1, "T5.1", half1, CodeTag::MDS, c_mds_even, shape(L(1, 1), NL(-1, 0)), std::nullopt, false, true,
         {grs_structure(), split_prod(bd_tight, shape(L(2, 0), NL(-2, 1))),
          split_prod(bd_tight, shape(L(2, 1), NL(-2, 0)))}});
    add({1, "", half1, CodeTag::MDS, c_mds_even, shape(L(1, 1), NL(-1, -1)), std::nullopt, true, false,
         {split_cdual(bd_wide), split_cdual(bd_tight), split_prod(bd_tight, shape(L(2, 0), NL(-2, 0)))}});

    // NMDS C with d = 2l + 1.
    add({2, "T3.1", half1, CodeTag::NMDS, c_nmds_odd, shape(L(1, 3), NL(-1, -2)), CaseLabel{'A', 4}, false, false,
         {small_code(true)}});
    add({2, "T3.2", half1, CodeTag::NMDS, c_nmds_odd, shape(L(1, 2), NL(-1, -1)), CaseLabel{'A', 2}, false, false,
         {small_code(true)}});
    add({2, "C3.1", n3, CodeTag::NMDS, c_nmds_odd, shape(L(1, 2), NL(-1, -2)), CaseLabel{'A', 5}, true, false,
         {split_cdual(bd_tight), split_prod(bd_tight, shape(L(2, 1), NL(-2, -1)))}});
    add({2, "T3.3", n3, CodeTag::NMDS, c_nmds_odd, shape(L(1, 1), NL(-1, 0)), CaseLabel{'A', 1}, false, false,
         {split(bd_wide), split_prod(bd_tight, shape(L(2, 0), NL(-2, 1))), split_cdual(bd_tight)}});

    // NMDS C with d = 2l + 2.
    add({2, "T4.1", n3, CodeTag::NMDS, c_nmds_even, shape(L(1, 4), NL(-1, -3)), CaseLabel{'D', 7}, false, false,
         {small_code(false)}});
    add({2, "T4.2", n3, CodeTag::NMDS, c_nmds_even, shape(L(1, 3), NL(-1, -2)), CaseLabel{'D', 4}, false, false,
         {small_code(false)}});
    add({2, "C4.1", half2, CodeTag::NMDS, c_nmds_even, shape(L(1, 3), NL(-1, -3)), CaseLabel{'D', 8}, true, false,
         {split_cdual(bd_tight), split_prod(bd_tight, shape(L(2, 2), NL(-2, -2)))}});
    add({2, "T4.3", half2, CodeTag::NMDS, c_nmds_even, shape(L(1, 2), NL(-1, -1)), CaseLabel{'D', 2}, false, false,
         {split(bd_wide), split_prod(bd_tight, shape(L(2, 1), NL(-2, 0))), split_cdual(bd_tight)}});
    return rows;
}

void append_term(std::string& out, int coef, const char* symbol) {
    if (coef == 0) return;
    const int mag = coef < 0 ? -coef : coef;
    if (coef < 0) {
        out += kMinus;
    } else if (!out.empty()) {
        out += '+';
    }
    if (mag != 1 || symbol[0] == '\0') out += std::to_string(mag);
    out += symbol;
}

}  // namespace

long long Affine::eval(std::size_t n_value, std::size_t ell_value) const noexcept {
    return static_cast<long long>(n) * static_cast<long long>(n_value) +
           static_cast<long long>(ell) * static_cast<long long>(ell_value) + c;
}

std::string Affine::render() const {
    std::string out;
    append_term(out, n, "n");
    append_term(out, ell, kEll);
    append_term(out, c, "");
    return out.empty() ? "0" : out;
}

std::optional<Params> ParamShape::eval(std::size_t n, std::size_t ell) const {
    const long long kv = k.eval(n, ell);
    const long long dv = d.eval(n, ell);
    if (kv <= 0 || dv <= 0) return std::nullopt;
    return Params{n, static_cast<std::size_t>(kv), static_cast<std::size_t>(dv)};
}

bool ParamShape::matches(const Params& p, std::size_t ell) const {
    const auto e = eval(p.n, ell);
    return e && *e == p;
}

std::string ParamShape::render() const {
    return "[n," + k.render() + "," + d.render() + "]";
}

bool EllRange::contains(std::size_t n, std::size_t ell) const noexcept {
    if (static_cast<long long>(ell) < min_ell) return false;
    const long long twice = 2 * static_cast<long long>(ell);
    const long long nn = static_cast<long long>(n);
    switch (upper) {
        case EllBound::HalfMinusOne: return twice < nn - 2;
        case EllBound::NMinusThreeHalf: return twice < nn - 3;
        case EllBound::HalfMinusTwo: return twice < nn - 4;
    }
    return false;
}

std::string EllRange::render() const {
    std::string out = std::to_string(min_ell) + "≤" + kEll + "<";
    switch (upper) {
        case EllBound::HalfMinusOne: out += std::string("n/2") + kMinus + "1"; break;
        case EllBound::NMinusThreeHalf: out += std::string("(n") + kMinus + "3)/2"; break;
        case EllBound::HalfMinusTwo: out += std::string("n/2") + kMinus + "2"; break;
    }
    return out;
}

std::string Outcome::render() const {
    switch (kind) {
        case Kind::SmallCode:
            return std::string("C=[n,2,n") + kMinus + "2] with n " + (n_odd ? "odd" : "even");
        case Kind::GrsStructure:
            return "C, A and B are GRS, B=(A∗C)⊥";
        case Kind::Split: break;
    }
    std::string out = "B⊥=" + b_dual->render();
    if (prod == Prod::CDual) out += ", A∗B=C⊥";
    if (prod == Prod::Shape) out += ", A∗B=" + prod_shape.render();
    return out;
}

std::string TheoremRow::render_entry() const {
    std::string out = "A=" + a.render();
    if (a_full) out += " full";
    out += " → ";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (i) out += " or ";
        out += outcomes[i].render();
    }
    return out;
}

const std::vector<TheoremRow>& theorem_rows() {
    static const std::vector<TheoremRow> rows = build_rows();
    return rows;
}

std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    std::set<std::string> seen;
    for (const auto& r : theorem_rows()) {
        if (!r.id.empty() && seen.insert(r.id).second) ids.push_back(r.id);
    }
    return ids;
}

ParamShape case_shape(const CaseRow& row) {
    return shape(L(1, row.dk), NL(-1, -row.dd));
}

std::string emit_tables() {
    std::ostringstream os;
    const ParamShape c_for[2] = {shape(NL(-2, -1), L(2, 1)), shape(NL(-2, -2), L(2, 2))};
    const char families[2] = {'A', 'D'};
    for (int f = 0; f < 2; ++f) {
        os << "Cases for A, NMDS C=" << c_for[f].render() << "\n";
        for (const CaseRow& row : case_rows(families[f])) {
            os << "  " << families[f] << '.' << row.index << "  A=" << case_shape(row).render() << '\n';
        }
        os << '\n';
    }

    for (int table = 1; table <= 2; ++table) {
        os << "Table " << table << ": B⊥ and A∗B when the " << (table == 1 ? "MDS" : "NMDS")
           << " code C has an ℓ-ECP (A, B)\n";
        for (const auto& r : theorem_rows()) {
            if (r.table != table) continue;
            os << "  " << r.range.render() << " | C=" << r.c.render() << " | " << r.render_entry();
            if (!r.id.empty()) os << " [" << r.id << ']';
            os << '\n';
        }
        if (table == 1) os << '\n';
    }
    return os.str();
}

}  // namespace ecpkit
