#pragma once

#include <stdexcept>
#include <string>

namespace bistellar {

enum class Errc {
    NotPure,
    NotClosed,
    NotConnected,
    NotOrientable,
    FaceNotInComplex,
    VertexOverlap,
    KOutOfRange,
    NotFaces,
    DimensionMismatch,
    PairNotValid,
    PairNotValidAtStep,
    NotMiddleMove,
    OrientationBreak,
    IndexMismatch,
    DivisorMismatch,
    NonDivisible,
    NormalizationImpossible,
    BudgetExceeded,
    WrongDimension,
    ParseError,
};

/// Exception carrying one of the named failure conditions above.
/// `detail` holds a step index (apply_sequence) or line number (parser),
/// -1 when unused.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, long detail = -1)
        : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

    Errc code() const noexcept { return code_; }
    long detail() const noexcept { return detail_; }

private:
    Errc code_;
    long detail_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPure: return "NotPure";
        case Errc::NotClosed: return "NotClosed";
        case Errc::NotConnected: return "NotConnected";
        case Errc::NotOrientable: return "NotOrientable";
        case Errc::FaceNotInComplex: return "FaceNotInComplex";
        case Errc::VertexOverlap: return "VertexOverlap";
        case Errc::KOutOfRange: return "KOutOfRange";
        case Errc::NotFaces: return "NotFaces";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::PairNotValid: return "PairNotValid";
        case Errc::PairNotValidAtStep: return "PairNotValidAtStep";
        case Errc::NotMiddleMove: return "NotMiddleMove";
        case Errc::OrientationBreak: return "OrientationBreak";
        case Errc::IndexMismatch: return "IndexMismatch";
        case Errc::DivisorMismatch: return "DivisorMismatch";
        case Errc::NonDivisible: return "NonDivisible";
        case Errc::NormalizationImpossible: return "NormalizationImpossible";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::WrongDimension: return "WrongDimension";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace bistellar
