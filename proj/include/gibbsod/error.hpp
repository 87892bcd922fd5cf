#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gibbsod {

enum class ErrorCode {
    InputError,
    CollinearPositions,
    NonCoplanar,
    DuplicatePoints,
    DegenerateIntersection,
    PointAtInfinity,
    DegenerateConfiguration,
    InvalidConic,
    InvalidGeometry,
    BeyondAsymptote,
    CircularAmbiguity,
};

/// Stable machine-readable name, e.g. "NonCoplanar".
std::string_view error_name(ErrorCode code) noexcept;

/// Process exit status the CLI uses for each error.
///   2 input parse, 3 collinear, 4 non-coplanar, 5 degenerate fit, 6 invalid conic.
int exit_code(ErrorCode code) noexcept;

class OdError : public std::runtime_error {
public:
    OdError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gibbsod
