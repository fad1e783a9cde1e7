"""Two-period growth model with a pollution-health feedback.

Steady states, transition paths and recycling-policy analysis; the heavy
lifting lives in the compiled extension.
"""

from ._core import (
    ComparativeStatics,
    DerivedParams,
    EconState,
    ModelParams,
    PolicyReport,
    Regime,
    ScalarMaxResult,
    Scenario,
    SimSettings,
    SteadyState,
    Trajectory,
    beta_hat,
    beta_hat_u,
    central_diff,
    classify,
    cohort_welfare,
    comparative_statics,
    derive,
    du_dbeta,
    dy_dbeta,
    gap,
    initial_state,
    load_scenario,
    maximize_on_unit_interval,
    parse_scenario,
    policy_json,
    regime_name,
    render_scenario,
    simulate,
    solve_steady_state,
    step,
    tau_cutoff_u,
    tau_cutoff_y,
    trajectory_csv,
    validate,
    welfare,
)

__all__ = [
    "ComparativeStatics",
    "DerivedParams",
    "EconState",
    "ModelParams",
    "PolicyReport",
    "Regime",
    "ScalarMaxResult",
    "Scenario",
    "SimSettings",
    "SteadyState",
    "Trajectory",
    "beta_hat",
    "beta_hat_u",
    "central_diff",
    "classify",
    "cohort_welfare",
    "comparative_statics",
    "derive",
    "du_dbeta",
    "dy_dbeta",
    "gap",
    "initial_state",
    "load_scenario",
    "maximize_on_unit_interval",
    "parse_scenario",
    "policy_json",
    "regime_name",
    "render_scenario",
    "simulate",
    "solve_steady_state",
    "step",
    "tau_cutoff_u",
    "tau_cutoff_y",
    "trajectory_csv",
    "validate",
    "welfare",
]

__version__ = "0.1.0"
