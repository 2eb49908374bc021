#pragma once

#include <stdexcept>
#include <string>

namespace sphshock {

enum class ErrKind {
    NonPositiveDensity,
    PotentialOutOfRange,
    NonPositiveRadius,
    DegenerateJump,
    SonicShock,
    NoConvergence,
    InadmissibleBranch,
    InadmissibleConfiguration,
    SingularSystem,
    OutOfDomain,
    BadResolution,
    CharacteristicDegeneracy,
    QuadratureDomainError,
    NonFinite,
    ConfigError,
};

const char* to_string(ErrKind kind);

/// Error with a machine-readable kind; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void raise(ErrKind kind, const std::string& what)
{
    throw Error(kind, what);
}

}  // namespace sphshock
