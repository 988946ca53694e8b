#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgcodes {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldMismatch,
    ZeroInverse,
    GeometryMismatch,
    EqualPoints,
    DimensionOutOfRange,
    EmptySubspace,
    LengthMismatch,
    DimensionMismatch,
    BudgetExceeded,
    NoInformationSetFound,
    DimensionTooLow,
    NotInCode,
    QInX,
    PointNotInSet,
    NotBlocking,
    EqualHyperplanes,
    InfeasibleParams,
    UnknownFormat,
    InvalidArgument,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures surface as this type; code() tells them apart.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace pgcodes
