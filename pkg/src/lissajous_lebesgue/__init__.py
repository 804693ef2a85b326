"""Lissajous-Chebyshev interpolation, polyhedral Dirichlet kernels and Lebesgue constants."""

__version__ = "0.1.0"
