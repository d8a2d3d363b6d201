"""Coordinates, traces, switches and twist dynamics for type-preserving
representations of the thrice-punctured projective plane."""

from charvar._core import (  # noqa: F401
    DomainError,
    admissibility_walk,
    central_character,
    classify,
    curve_trace,
    cusp_signs,
    edge_curve,
    edge_traces,
    euler_class,
    gti_satisfied,
    hyperbolicity_scan,
    model,
    omega_orbit,
    peripheral_curve,
    relation_residual,
    rotation_number,
    run_suite,
    sample,
    section,
    solve_d,
    suite_names,
    switch,
    switch_via_flips,
    trace_reduce,
    triangle_coords,
    vieta_flip,
)

__version__ = "0.3.0"
