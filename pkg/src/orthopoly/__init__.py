from src.orthopoly.bessel import (
    BesselParams,
    bessel_eval,
    bessel_generating_function,
    bessel_inner_product,
    bessel_norm,
    bessel_sequence,
    bessel_series,
    bessel_via_laguerre,
    log_bessel_norm,
)
from src.orthopoly.identities import (
    backward_shift_residual,
    differential_equation_residual,
    forward_shift_residual,
    lowering_identity_residual,
    triple_agreement,
)
from src.orthopoly.laguerre import laguerre_eval, laguerre_functions, laguerre_table
from src.orthopoly.quadrature import QuadratureRule, gauss_laguerre_rule
from src.orthopoly.special import gamma, log_gamma, pochhammer

__all__ = [
    "BesselParams",
    "QuadratureRule",
    "bessel_eval",
    "bessel_generating_function",
    "bessel_inner_product",
    "bessel_norm",
    "bessel_sequence",
    "bessel_series",
    "bessel_via_laguerre",
    "backward_shift_residual",
    "differential_equation_residual",
    "forward_shift_residual",
    "gamma",
    "gauss_laguerre_rule",
    "laguerre_eval",
    "laguerre_functions",
    "laguerre_table",
    "log_bessel_norm",
    "log_gamma",
    "lowering_identity_residual",
    "pochhammer",
    "triple_agreement",
]
