#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trivext {

enum class Errc {
    InversionOfZero,
    DivisionByZero,
    MixedDomains,
    MixedModulus,
    ColonByZeroIdeal,
    NotIntegral,
    FieldDomainRejected,
    ZeroIdealI,
    WindowTooSmall,
    InvalidDomain,
    UnsupportedCombination,
    ParseError,
};

const char* errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Literal parse failure, annotated with the byte offset inside the literal.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(Errc::ParseError, "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InversionOfZero: return "InversionOfZero";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedDomains: return "MixedDomains";
    case Errc::MixedModulus: return "MixedModulus";
    case Errc::ColonByZeroIdeal: return "ColonByZeroIdeal";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::FieldDomainRejected: return "FieldDomainRejected";
    case Errc::ZeroIdealI: return "ZeroIdealI";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::InvalidDomain: return "InvalidDomain";
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace trivext
