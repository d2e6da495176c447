#include "ecpkit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ecpkit/error.hpp"

namespace ecpkit {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::string s = line;
    for (char& ch : s) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::uint64_t parse_uint(const std::string& t, const std::string& what) {
    std::uint64_t v = 0;
    const auto* first = t.data();
    const auto* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw Error(Errc::ParseError, "bad " + what + ": '" + t + "'");
    return v;
}

std::vector<std::uint64_t> parse_uints(const std::vector<std::string>& toks, std::size_t from,
                                       const std::string& what) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = from; i < toks.size(); ++i) out.push_back(parse_uint(toks[i], what));
    return out;
}

// Non-blank, non-comment lines.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<unsigned> to_modulus(const std::vector<std::uint64_t>& v) {
    std::vector<unsigned> out;
    for (auto x : v) out.push_back(static_cast<unsigned>(x));
    return out;
}

void expect_count(std::size_t got, std::size_t want, const std::string& what) {
    if (got != want) {
        throw Error(Errc::ParseError,
                    what + ": expected " + std::to_string(want) + " values, found " + std::to_string(got));
    }
}

}  // namespace

Vec parse_felt_list(const FieldSpec& f, const std::string& text) {
    Vec out;
    for (const auto& t : tokens(text)) {
        const std::uint64_t v = parse_uint(t, "field element");
        if (v >= f.q()) throw Error(Errc::ParseError, "field element " + t + " out of range");
        out.push_back(Felt{static_cast<std::uint32_t>(v)});
    }
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& t : tokens(text)) out.push_back(static_cast<std::size_t>(parse_uint(t, "index")));
    return out;
}

std::string format_felt_list(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i].value);
    }
    return out;
}

std::string write_code(const LinearCode& c) {
    const FieldSpec& f = c.field();
    std::ostringstream os;
    os << f.p() << ' ' << f.m() << ' ' << c.length() << ' ' << c.dimension() << '\n';
    if (f.m() > 1) {
        const auto& mod = f.modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) os << (i ? " " : "") << mod[i];
        os << '\n';
    }
    os << to_text(c.generator());
    return os.str();
}

LinearCode parse_code(const std::string& text, std::vector<std::string>* warnings) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error(Errc::ParseError, "empty code file");
    std::size_t at = 0;
    const auto head = parse_uints(tokens(lines[at++]), 0, "header");
    expect_count(head.size(), 4, "header 'p m n k'");
    const auto p = static_cast<unsigned>(head[0]);
    const auto m = static_cast<unsigned>(head[1]);
    const auto n = static_cast<std::size_t>(head[2]);
    const auto k = static_cast<std::size_t>(head[3]);
    if (m == 0) throw Error(Errc::ParseError, "extension degree must be at least 1");

    std::optional<std::vector<unsigned>> modulus;
    if (m > 1) {
        if (at >= lines.size()) throw Error(Errc::ParseError, "missing modulus line");
        const auto mod = parse_uints(tokens(lines[at++]), 0, "modulus coefficient");
        expect_count(mod.size(), m + 1, "modulus");
        modulus = to_modulus(mod);
    }
    const FieldSpec f = FieldSpec::make(p, m, modulus);

    if (at >= lines.size()) throw Error(Errc::ParseError, "missing matrix header");
    const auto shape = parse_uints(tokens(lines[at++]), 0, "matrix header");
    expect_count(shape.size(), 2, "matrix header 'rows cols'");
    if (shape[0] != k || shape[1] != n) throw Error(Errc::ParseError, "matrix header disagrees with 'p m n k'");
    if (lines.size() - at != k) {
        throw Error(Errc::ParseError, "expected " + std::to_string(k) + " generator rows, found " +
                                          std::to_string(lines.size() - at));
    }
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < k; ++r) {
        Vec row = parse_felt_list(f, lines[at + r]);
        expect_count(row.size(), n, "generator row " + std::to_string(r + 1));
        rows.push_back(std::move(row));
    }
    if (n == 0) throw Error(Errc::ParseError, "code length must be positive");
    return code_from_generator(f, Mat::from_rows(f, rows, n), warnings);
}

Stanza parse_stanza(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error(Errc::ParseError, "empty stanza");
    const auto head = tokens(lines[0]);
    const bool twisted = !head.empty() && head[0] == "tgrs";
    if (head.empty() || (head[0] != "grs" && !twisted)) throw Error(Errc::ParseError, "stanza must start with grs or tgrs");
    const auto nums = parse_uints(head, 1, "stanza header");
    expect_count(nums.size(), twisted ? 7 : 4, twisted ? "header 'tgrs p m n k eta t h'" : "header 'grs p m n k'");

    std::optional<std::vector<unsigned>> modulus;
    std::optional<std::string> alpha_text;
    std::optional<std::string> v_text;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto toks = tokens(lines[i]);
        const std::string rest = lines[i].substr(lines[i].find(toks[0]) + toks[0].size());
        if (toks[0] == "modulus") {
            modulus = to_modulus(parse_uints(toks, 1, "modulus coefficient"));
        } else if (toks[0] == "alpha") {
            alpha_text = rest;
        } else if (toks[0] == "v") {
            v_text = rest;
        } else {
            throw Error(Errc::ParseError, "unknown stanza line '" + toks[0] + "'");
        }
    }
    if (!alpha_text) throw Error(Errc::ParseError, "stanza has no alpha line");

    const FieldSpec f = FieldSpec::make(static_cast<unsigned>(nums[0]), static_cast<unsigned>(nums[1]), modulus);
    const auto n = static_cast<std::size_t>(nums[2]);
    GrsSpec grs{f, parse_felt_list(f, *alpha_text), {}, static_cast<std::size_t>(nums[3])};
    expect_count(grs.alpha.size(), n, "alpha");
    if (v_text) {
        grs.v = parse_felt_list(f, *v_text);
        expect_count(grs.v.size(), n, "v");
    }
    Stanza s{twisted, grs, std::nullopt};
    if (twisted) {
        if (nums[4] >= f.q()) throw Error(Errc::ParseError, "eta out of range");
        s.tgrs = TgrsSpec{grs, Felt{static_cast<std::uint32_t>(nums[4])}, static_cast<std::size_t>(nums[5]),
                          static_cast<std::size_t>(nums[6])};
    }
    return s;
}

std::string write_stanza(const Stanza& s) {
    const FieldSpec& f = s.grs.field;
    std::ostringstream os;
    os << (s.twisted ? "tgrs " : "grs ") << f.p() << ' ' << f.m() << ' ' << s.grs.alpha.size() << ' ' << s.grs.k;
    if (s.twisted && s.tgrs) os << ' ' << s.tgrs->eta.value << ' ' << s.tgrs->t << ' ' << s.tgrs->h;
    os << '\n';
    if (f.m() > 1) {
        os << "modulus";
        for (unsigned c : f.modulus()) os << ' ' << c;
        os << '\n';
    }
    os << "alpha " << format_felt_list(s.grs.alpha) << '\n';
    if (!s.grs.v.empty()) os << "v " << format_felt_list(s.grs.v) << '\n';
    return os.str();
}

LoadedCode parse_code_or_stanza(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error(Errc::ParseError, "empty input");
    const auto first = tokens(lines[0]);
    if (first[0] == "grs" || first[0] == "tgrs") {
        const Stanza s = parse_stanza(text);
        LinearCode c = s.twisted ? tgrs(*s.tgrs) : grs(s.grs);
        return LoadedCode{std::move(c), s.grs.alpha, {}};
    }
    std::vector<std::string> warnings;
    LinearCode c = parse_code(text, &warnings);
    return LoadedCode{std::move(c), std::nullopt, std::move(warnings)};
}

LoadedCode load_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_or_stanza(buf.str());
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error(Errc::ParseError, "write failed for '" + path + "'");
}

}  // namespace ecpkit
