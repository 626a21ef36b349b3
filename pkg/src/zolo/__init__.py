"""Zolotarev sign and ratio problems via Loewner interpolation and AAA/Lawson."""
from .aaa import AAAConfig, LawsonState, aaa_fit, lawson_refine, residual_curve
from .domains import (CATALOG, PartitionedData, SignProblemInstance, is_conjugate_closed,
                      make_example, split_left_right, two_circles)
from .errors import *  # noqa: F401,F403
from .harness import (ExperimentConfig, ExperimentReport, export_contour_grid,
                      run_experiment, sweep_orders)
from .loewner import (LoewnerPencil, build_pencil, detect_order, interpolation_residual,
                      normalized_singular_values, reduce)
from .rational import (BarycentricForm, DescriptorRealization, PolynomialRatio, ZeroPoleGain,
                       mobius_z3_to_z4, mobius_z4_to_z3, poles, to_descriptor,
                       to_polynomial_ratio, to_zero_pole_gain, zeros)
from .zolotarev import (SolvePolicy, ZolotarevSolution, extremal_sets, measure_sigma,
                        optimal_sign_two_circles, optimal_two_circles, sigma_from_tau,
                        sign_of, solve_z4, tau_from_sigma, z4_to_z3)

__version__ = "0.1.0"
