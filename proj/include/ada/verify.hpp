#pragma once

#include <json.hpp>

#include "ada/params.hpp"

namespace ada {
namespace verify {

// Verification suites shared by the CLI `verify` subcommand and the test
// binaries. Each returns {"suite": ..., "pass": bool, "results": [...]}
// with one entry per checked property.

// ops.apply against the three-step pipeline route, per allowed operation
// kind (including alpha-variants over the eigenvalues of C0 and twists).
nlohmann::json pipeline_suite(const ADAParameter& t);

// Closed-form dualities against their operation compositions; `l` is the
// column count for duality I.
nlohmann::json dualities_suite(const ADAParameter& t, int l);

// Orbit window checks: slope soundness/completeness, per-slope counts,
// edge pairing, determinism, closure consistency.
nlohmann::json orbit_suite(const ADAParameter& t, int r_max);

// Diagram checks on the orbit window: even diagonals, Fourier invariance,
// dimension invariance, gamma_plus scan vs closed form.
nlohmann::json diagrams_suite(const ADAParameter& t, int r_max);

} // namespace verify
} // namespace ada
