"""Fifth-order Hermite-Fejer interpolation on the unit circle with nodes from
vertically projected Gauss-Jacobi points plus +1 and -1."""

from ._kernels import BACKEND
from .basis import NodeBasisData, build_basis_data, lagrange_eval, lagrange_self_derivs, r_derivs_at_node
from .errors import DegenerateSystemError, NumericalFailure, ParameterDomainError, UnsupportedOrderError
from .hermite import (
    HermiteCoefficients,
    Interpolant,
    a0k_eval,
    coeffs_closed_form,
    coeffs_oracle,
    coeffs_rederived,
    compare_coefficients,
    eval_jet,
    interpolate,
    verify_hermite_conditions,
)
from .jacobi import JacobiParams, jacobi_deriv, jacobi_eval, jacobi_zeros, leading_constant
from .jets import ComplexJet, jet_eval_poly_from_roots, jet_variable
from .nodal import NodalSystem, build_nodes, eval_R, eval_W, szego_x

__version__ = "0.1.0"
