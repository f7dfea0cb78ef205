#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tnc {

/// Error conditions raised across the library. The CLI maps these onto
/// exit codes and report fields, so the names are part of the output format.
enum class Errc {
    InvalidArgument,
    NotPrime,
    ReducibleModulus,
    NoSuchElement,
    WrongOrder,
    CharacteristicDividesN,
    FieldMismatch,
    NotSubfield,
    Singular,
    CycleDetected,
    DanglingDemand,
    InvalidNetwork,
    WindowUnderspecified,
    BlockTooLong,
    WindowMismatch,
    SingularAtGeneration,
    NonSquare,
    ZeroDeterminant,
    Unfixable,
    SearchExhausted,
    MinCutViolation,
    CharacteristicDividesBlock,
    UnsupportedPattern,
    NotFound,
    SingularDecodeSystem,
    SingularBlock,
    ParseError,
    SchemaError,
    UnknownFixture,
};

constexpr std::string_view to_string(Errc e) {
    switch (e) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoSuchElement: return "NoSuchElement";
    case Errc::WrongOrder: return "WrongOrder";
    case Errc::CharacteristicDividesN: return "CharacteristicDividesN";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotSubfield: return "NotSubfield";
    case Errc::Singular: return "Singular";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::DanglingDemand: return "DanglingDemand";
    case Errc::InvalidNetwork: return "InvalidNetwork";
    case Errc::WindowUnderspecified: return "WindowUnderspecified";
    case Errc::BlockTooLong: return "BlockTooLong";
    case Errc::WindowMismatch: return "WindowMismatch";
    case Errc::SingularAtGeneration: return "SingularAtGeneration";
    case Errc::NonSquare: return "NonSquare";
    case Errc::ZeroDeterminant: return "ZeroDeterminant";
    case Errc::Unfixable: return "Unfixable";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::MinCutViolation: return "MinCutViolation";
    case Errc::CharacteristicDividesBlock: return "CharacteristicDividesBlock";
    case Errc::UnsupportedPattern: return "UnsupportedPattern";
    case Errc::NotFound: return "NotFound";
    case Errc::SingularDecodeSystem: return "SingularDecodeSystem";
    case Errc::SingularBlock: return "SingularBlock";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::UnknownFixture: return "UnknownFixture";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace tnc
