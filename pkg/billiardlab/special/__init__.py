from .bessel import MAX_ORDER, BesselZeroTable, asymptotic_zero, bessel_j, bessel_zero, bessel_zeros
from .overlap import gaussian_trig_overlap
from .quadrature import fourier_integral, gauss_legendre, quad_radial, radial_converged

__all__ = [
    "MAX_ORDER",
    "BesselZeroTable",
    "asymptotic_zero",
    "bessel_j",
    "bessel_zero",
    "bessel_zeros",
    "gaussian_trig_overlap",
    "fourier_integral",
    "gauss_legendre",
    "quad_radial",
    "radial_converged",
]
