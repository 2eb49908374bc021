#include "sphshock/errors.hpp"

namespace sphshock {

const char* to_string(ErrKind kind)
{
    switch (kind) {
        case ErrKind::NonPositiveDensity: return "NonPositiveDensity";
        case ErrKind::PotentialOutOfRange: return "PotentialOutOfRange";
        case ErrKind::NonPositiveRadius: return "NonPositiveRadius";
        case ErrKind::DegenerateJump: return "DegenerateJump";
        case ErrKind::SonicShock: return "SonicShock";
        case ErrKind::NoConvergence: return "NoConvergence";
        case ErrKind::InadmissibleBranch: return "InadmissibleBranch";
        case ErrKind::InadmissibleConfiguration: return "InadmissibleConfiguration";
        case ErrKind::SingularSystem: return "SingularSystem";
        case ErrKind::OutOfDomain: return "OutOfDomain";
        case ErrKind::BadResolution: return "BadResolution";
        case ErrKind::CharacteristicDegeneracy: return "CharacteristicDegeneracy";
        case ErrKind::QuadratureDomainError: return "QuadratureDomainError";
        case ErrKind::NonFinite: return "NonFinite";
        case ErrKind::ConfigError: return "ConfigError";
    }
    return "Error";
}

}  // namespace sphshock
