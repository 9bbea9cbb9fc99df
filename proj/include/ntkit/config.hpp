#pragma once

// Flat "key = value" configuration for the proof constants and resource
// knobs; CLI --constants overrides win over file values.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ntkit/bounds.hpp"
#include "ntkit/sieve.hpp"

namespace ntkit {

struct ToolConfig {
  BoundConstants constants;
  uint64_t sieve_ceiling = kDefaultSieveCeiling;
};

// Parses "key = value" lines; '#' starts a comment. Unknown keys are an
// error. Recognized: K_d, K, K_prime, K_double_prime, M, kappa,
// kappa_prime, sieve_ceiling.
void load_config_file(const std::string& path, ToolConfig& cfg);

// One "key=value" override, the --constants flag payload.
void apply_config_override(const std::string& spec, ToolConfig& cfg);

}  // namespace ntkit
