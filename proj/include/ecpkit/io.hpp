#pragma once

// Text formats.
//
// Code file:
//     p m n k
//     c0 c1 ... cm          (only when m > 1: modulus coefficients)
//     k n
//     <k rows of n canonical integers>
//
// Construction stanzas, accepted wherever a code file is:
//     grs p m n k                  tgrs p m n k eta t h
//     modulus c0 ... cm            (optional, m > 1)
//     alpha a1,a2,...,an
//     v v1,...,vn                  (optional, defaults to all ones)
//
// Blank lines and lines starting with '#' are skipped. Lists may be
// separated by commas, spaces or both.

#include <optional>
#include <string>
#include <vector>

#include "ecpkit/code.hpp"
#include "ecpkit/construct.hpp"

namespace ecpkit {

/// Writes the code file format; parse_code(write_code(c)) == c and the text
/// round-trips byte for byte.
std::string write_code(const LinearCode& c);
LinearCode parse_code(const std::string& text, std::vector<std::string>* warnings = nullptr);

struct LoadedCode {
    LinearCode code;
    /// The evaluation sequence when the input was a stanza.
    std::optional<Vec> alpha;
    std::vector<std::string> warnings;
};

/// Accepts either a code file or a stanza. Throws ParseError on malformed or
/// empty input.
LoadedCode parse_code_or_stanza(const std::string& text);
LoadedCode load_code_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

/// Canonical integers separated by commas and/or whitespace, each checked
/// against the field.
Vec parse_felt_list(const FieldSpec& f, const std::string& text);
std::vector<std::size_t> parse_index_list(const std::string& text);
std::string format_felt_list(const Vec& v);

/// A parsed stanza keeps its construction data so callers can reuse alpha.
struct Stanza {
    bool twisted = false;
    GrsSpec grs;
    std::optional<TgrsSpec> tgrs;
};
Stanza parse_stanza(const std::string& text);
std::string write_stanza(const Stanza& s);

}  // namespace ecpkit
