"""Frozen regression constants for the two reference configurations.

The thresholds were measured once by running the shipped fast path against
the direct-quadrature oracle over the central 80% of output nodes, then
frozen at twice the observed max-abs error.  They are regression constants:
a failure means the factorization, the kernel sign convention, or the
oracle drifted.
"""
from .lct import LctParams
from .oracle import GaussianParams

__all__ = [
    "FIGURE1_GAUSSIAN", "FIGURE1_PARAMS", "FIGURE1_N", "FIGURE1_MAX_ABS",
    "FIGURE2_GAUSSIAN", "FIGURE2_PARAMS", "FIGURE2_N", "FIGURE2_MAX_ABS",
]

# Chirped-Gaussian configuration, n = 512.
# Observed central-80% max-abs error vs direct quadrature: 1.3774e-15.
FIGURE1_GAUSSIAN = GaussianParams(alpha=1.0, beta=2.0, gamma=3.0)
FIGURE1_PARAMS = LctParams(1.0, 2.0, 0.5, 2.0)
FIGURE1_N = 512
FIGURE1_MAX_ABS = 2.76e-15

# Fresnel configuration (a, b, c, d) = (1, 100, 0, 1), n = 1024.
# Observed central-80% max-abs error vs direct quadrature: 6.9314e-16.
FIGURE2_GAUSSIAN = GaussianParams(alpha=2.0, beta=1.0, gamma=3.0)
FIGURE2_PARAMS = LctParams(1.0, 100.0, 0.0, 1.0)
FIGURE2_N = 1024
FIGURE2_MAX_ABS = 1.39e-15
