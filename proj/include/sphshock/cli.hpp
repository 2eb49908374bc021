#pragma once

#include <ostream>

#include "sphshock/config.hpp"

namespace sphshock {

/// Exit codes: 0 success, 2 inadmissible configuration, 3 no convergence,
/// 4 I/O or config error.
int exit_code_for(ErrKind kind);

int cmd_riemann(const RunConfig& cfg, std::ostream& log);
int cmd_solve(const RunConfig& cfg, std::ostream& log);
int cmd_validate(const RunConfig& cfg, std::ostream& log);
int cmd_phi(const RunConfig& cfg, std::ostream& log);

}  // namespace sphshock
