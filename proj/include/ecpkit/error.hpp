#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecpkit {

enum class Errc {
    NotPrime,
    NotIrreducible,
    UnsupportedDegree,
    DivideByZero,
    ShapeMismatch,
    FieldMismatch,
    LengthMismatch,
    ZeroCode,
    TrivialDual,
    TooLarge,
    BadIndex,
    EmptyResult,
    BadK,
    BadDistance,
    PreconditionFailed,
    InvalidSpec,
    ParseError,
    InvariantViolated,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the typed codes above.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace ecpkit
