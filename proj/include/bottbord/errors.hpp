#pragma once

#include <stdexcept>
#include <string>

namespace bottbord {

enum class Errc {
    EmptyDims,
    NonPositiveDim,
    ShapeMismatch,
    DiagonalNotOne,
    EntryOutOfRange,
    NotTriangularizable,
    TooManyFactors,
    NotACube,
    ReducedNotCharacteristic,
    NotCharacteristic,
    ModeMismatch,
    DegreeOutOfRange,
    NotTopDegree,
    NonUnitNormalization,
    NonIntegralPairing,
    OddTopDegree,
    OddDegree,
    BadL,
    UnknownTheorem,
    BadParams,
    InfeasibleSpec,
    IoFailure,
    UsageError,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

} // namespace bottbord
