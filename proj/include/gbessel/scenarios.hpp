#pragma once

// Scenario runners: each turns a resolved ScenarioConfig into a
// VerificationReport. Runs are deterministic given the config (including
// its seed) and independent of the sweep thread count.

#include <functional>
#include <utility>
#include <vector>

#include "gbessel/config.hpp"
#include "gbessel/report.hpp"
#include "gbessel/sweep.hpp"

namespace gbessel {

/// Blended-operator theorem: condition on Phi, Loewner chain, admissibility,
/// premise Phi_f < Phi_g and conclusion B_{kappa+2}(f)/z < B_{kappa+2}(g)/z.
VerificationReport run_theorem1_demo(const ScenarioConfig& cfg);

/// The lambda = 0 case, with the constant also evaluated by its own formula.
VerificationReport run_corollary_lambda0(const ScenarioConfig& cfg);

/// Suprema of |u - 1| for the three closed-form cases and the bound chain
/// |a|/2, |a|/6, |a|/10.
VerificationReport run_trig_chain(const ScenarioConfig& cfg);

/// omega conditions, the two-sided premise and its image under F_mu.
VerificationReport run_libera_sandwich(const ScenarioConfig& cfg);

/// Exact identities, ODE residuals, closed forms, scalar inequality.
VerificationReport run_identity_suite(const ScenarioConfig& cfg);

/// Parameter-space sweeps of gamma, admissibility and the key inequality.
VerificationReport run_condition_sweep(const ScenarioConfig& cfg);

/// Dispatches on cfg.scenario and applies cfg.expected_fail.
VerificationReport run_scenario(const ScenarioConfig& cfg);

/// Samples of the scenario's primary functional for CSV export: the
/// convexity functional of Phi (theorem1, corollary) or omega_2 (libera),
/// |u - 1| for cos sqrt z (trig_chain), the u-equation residual (identity
/// suite), and Re xi(is, -(1+s^2)/2) at z = i s for lambda = kappa = 0
/// (condition_sweep).
std::vector<GridSample> scenario_samples(const ScenarioConfig& cfg);

/// Every scenario with its defaults, after `adjust` has been applied to
/// each config.
std::vector<std::pair<Scenario, VerificationReport>> run_suite(
    const std::function<void(ScenarioConfig&)>& adjust = {});

}  // namespace gbessel
