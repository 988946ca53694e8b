#include "pgcodes/error.hpp"

namespace pgcodes {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::GeometryMismatch: return "GeometryMismatch";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
    case Errc::EmptySubspace: return "EmptySubspace";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NoInformationSetFound: return "NoInformationSetFound";
    case Errc::DimensionTooLow: return "DimensionTooLow";
    case Errc::NotInCode: return "NotInCode";
    case Errc::QInX: return "QInX";
    case Errc::PointNotInSet: return "PointNotInSet";
    case Errc::NotBlocking: return "NotBlocking";
    case Errc::EqualHyperplanes: return "EqualHyperplanes";
    case Errc::InfeasibleParams: return "InfeasibleParams";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

} // namespace pgcodes
