#pragma once

namespace lctforge {

// Resource knobs, overridable through the environment:
//   LCTFORGE_DEGREE_CAP  bound on standard-basis intermediate degree (default 64)
//   LCTFORGE_TRIALS      genericity retrials for the random-section path (default 3)
//   LCTFORGE_TMAX_CAP    cap on the convergence-experiment horizon (default 4)
int degree_cap();
int default_trials();
int tmax_cap();

// Coefficient bound B for generic draws: integers uniform in [-B, B].
inline constexpr int kCoefficientBound = 101;

// Boundary probe offset for the Howald cross-check, exact 1/1000.
inline constexpr long kProbeEpsilonDen = 1000;

}  // namespace lctforge
