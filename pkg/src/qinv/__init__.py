"""Exact perturbative invariants of 3-manifolds from classical data."""

from .alexander import AlexanderPolynomial, WheelExponential, WheelVector, a_coeffs, alpha, torsion_series, wheel_exp
from .berezin import (
    AntisymMatrix,
    GrassmannElement,
    SyntheticCurvature,
    berezin_integral,
    change_of_variables,
    gaussian_norm_check,
    pfaffian,
    tadpole_contract,
    vertex_integral_b2,
    vertex_integral_b3,
)
from .errors import DataInvariantError, UnsupportedCaseError
from .lam import (
    GData,
    LambdaVector,
    casson_g,
    connected_sum_lambda,
    lambda_from_z,
    reverse_lambda,
    verify_consum,
    z_from_lambda,
    z_heegaard_pair,
)
from .lmo import EMPTY, FormalDiagramSeries, Gamma, H, Wheels, connected_sum_omega, omega_rescale, z_lmo
from .manifold import S3, ClassicalData, connected_sum_data, h1_order, lescop
from .rw import (
    K3,
    T4,
    HyperKahlerWeightData,
    euler_hilb,
    euler_kummer,
    feasible_vertex_counts,
    orev_sign,
    product_x,
    w_pair,
    z_rw,
    z_rw_observable,
)
from .series import MultiPoly, SymmetricLaurent, TruncatedSeries, series_exp, series_log, sinh_kernel_b, substitute_exp

__all__ = [name for name in dir() if not name.startswith("_")]
