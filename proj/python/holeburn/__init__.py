"""Hole-burnt bosonic states: construction, nonclassicality witnesses, sweeps."""

from holeburn._core import (
    ConvergenceFailure,
    Engineering,
    Family,
    FockVector,
    InvalidParameter,
    MomentTable,
    StateSpec,
    WitnessReport,
    analytic_moment,
    analytic_moment_table,
    build_state,
    choose_cutoff,
    coherent_state,
    derived_normalization,
    double_factorial,
    dump_state,
    higher_order_antibunching,
    hong_mandel_squeezing,
    known_figures,
    linear_entropy,
    linear_entropy_closed_form,
    mean_photon_number,
    moment_oracle,
    number_central_moment,
    oracle_moment_table,
    photon_add,
    pochhammer,
    poisson_central_moment,
    published_normalization,
    quadrature_central_moment,
    reproduce,
    stirling2,
    sub_poissonian_statistics,
    summed_normalization,
    sweep_csv,
    vacuum_filter,
)

__all__ = [
    "ConvergenceFailure",
    "Engineering",
    "Family",
    "FockVector",
    "InvalidParameter",
    "MomentTable",
    "StateSpec",
    "WitnessReport",
    "analytic_moment",
    "analytic_moment_table",
    "build_state",
    "choose_cutoff",
    "coherent_state",
    "derived_normalization",
    "double_factorial",
    "dump_state",
    "higher_order_antibunching",
    "hong_mandel_squeezing",
    "known_figures",
    "linear_entropy",
    "linear_entropy_closed_form",
    "mean_photon_number",
    "moment_oracle",
    "number_central_moment",
    "oracle_moment_table",
    "photon_add",
    "pochhammer",
    "poisson_central_moment",
    "published_normalization",
    "quadrature_central_moment",
    "reproduce",
    "stirling2",
    "sub_poissonian_statistics",
    "summed_normalization",
    "sweep_csv",
    "vacuum_filter",
]
