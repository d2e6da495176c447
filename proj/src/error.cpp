#include "ecpkit/error.hpp"

namespace ecpkit {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::UnsupportedDegree: return "UnsupportedDegree";
        case Errc::DivideByZero: return "DivideByZero";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::TrivialDual: return "TrivialDual";
        case Errc::TooLarge: return "TooLarge";
        case Errc::BadIndex: return "BadIndex";
        case Errc::EmptyResult: return "EmptyResult";
        case Errc::BadK: return "BadK";
        case Errc::BadDistance: return "BadDistance";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::ParseError: return "ParseError";
        case Errc::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ecpkit
