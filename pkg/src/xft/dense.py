"""Dense O(N^2) reference transforms: the correctness oracle for the fast path.

Builds the discrete fractional Fourier matrix from the eigendecomposition of
the symmetric Jacobi matrix of the Hermite recurrence,

    F_z = sqrt(2*pi) * U^T D(z) U,     D(z) = diag(1, z, ..., z^{n-1}),

where column k of U is the unit eigenvector with eigenvalue equal to the k-th
exact Hermite zero, plus the chirp-factored LCT matrix L = S1 F S2 on the
asymptotic grid.  Matrices are materialized only up to n = 4096 (memory
guard; the dense path is a test oracle, not the product).

Construction is pure; a built DenseTransform is immutable and may be applied
to many vectors concurrently.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateParameterError,
    InvalidSizeError,
    ParameterError,
    ShapeError,
    SingularParameterError,
)
from .hermite import _psi_rows_rescaled, asymptotic_zeros, exact_hermite_zeros
from .kernel import input_chirp, output_chirp, scaled_fourier_matrix
from .lct import LctParams

__all__ = [
    "MAX_DENSE_N",
    "FrftOrder",
    "DenseTransform",
    "eigenvector_matrix",
    "frft_matrix",
    "mehler_kernel",
    "frft_matrix_asymptotic",
    "dense_lct_matrix",
]

MAX_DENSE_N = 4096
_UNIT_DISK_TOL = 1e-12
_SINGULAR_TOL = 1e-14


@dataclass(frozen=True)
class FrftOrder:
    """Complex order z of the discrete fractional Fourier transform, |z| <= 1."""

    z: complex

    def __post_init__(self):
        z = complex(self.z)
        if abs(z) > 1.0 + _UNIT_DISK_TOL:
            raise ParameterError(f"|z| = {abs(z)!r} lies outside the closed unit disk")
        object.__setattr__(self, "z", z)


@dataclass(frozen=True)
class DenseTransform:
    """A materialized n x n transform matrix with its provenance.

    provenance is "frft" (exact eigendecomposition), "chirp_factored"
    (closed-form kernel approximation), or "lct"; detail carries z or the
    (a, b, c, d) tuple.
    """

    n: int
    entries: np.ndarray
    provenance: str
    detail: object = field(default=None)

    def apply(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=complex)
        if v.shape != (self.n,):
            raise ShapeError(f"expected a vector of length {self.n}, got {v.shape}")
        return self.entries @ v


def _guard_dense_size(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidSizeError(f"size must be a positive integer, got {n!r}")
    if n > MAX_DENSE_N:
        raise InvalidSizeError(
            f"dense path materializes only n <= {MAX_DENSE_N} (got {n})"
        )


def eigenvector_matrix(n: int) -> np.ndarray:
    """Orthogonal eigenvector matrix U of the symmetrized Jacobi matrix.

    U[m, k] = psi_m(x_k) / norm of column k, with x_k the k-th exact Hermite
    zero (ascending).  Column normalization is algebraically the explicit
    closed-form constant (Christoffel-Darboux gives sum_m psi_m(x_k)^2 =
    n * psi_{n-1}(x_k)^2), and fixes the sign so the mode-0 component is
    positive.  Satisfies H U = U diag(x_k) and U^T U = I to rounding.
    """
    _guard_dense_size(n)
    zeros = exact_hermite_zeros(n)
    rows = _psi_rows_rescaled(n, zeros)
    norms = np.linalg.norm(rows, axis=0)
    if not np.all(np.isfinite(norms)) or np.any(norms == 0.0):
        raise ParameterError(
            f"eigenvector columns lost all precision at n = {n}"
        )
    return rows / norms


def frft_matrix(n: int, order: FrftOrder) -> DenseTransform:
    """Discrete fractional Fourier matrix sqrt(2*pi) U^T D(z) U."""
    _guard_dense_size(n)
    z = complex(order.z)
    u = eigenvector_matrix(n)
    weights = z ** np.arange(n)
    entries = np.sqrt(2.0 * np.pi) * ((u.T * weights[None, :]) @ u.astype(complex))
    return DenseTransform(n=n, entries=entries, provenance="frft", detail=z)


def mehler_kernel(order: FrftOrder, x, y):
    """Closed-form kernel K_z(x, y) the fractional matrix tends to.

    K_z = sqrt(2/(1-z^2)) * exp(-((1+z^2)(x^2+y^2) - 4xyz) / (2(1-z^2))),
    principal square-root branch; symmetric in (x, y).  Singular at z = +-1.
    """
    z = complex(order.z)
    if abs(z - 1.0) < _SINGULAR_TOL or abs(z + 1.0) < _SINGULAR_TOL:
        raise SingularParameterError(f"kernel is singular at z = {z} (1 - z^2 = 0)")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    one = 1.0 - z * z
    expo = -((1.0 + z * z) * (x * x + y * y) - 4.0 * x * y * z) / (2.0 * one)
    out = np.sqrt(2.0 / one) * np.exp(expo)
    return complex(out) if out.ndim == 0 else out


def frft_matrix_asymptotic(n: int, order: FrftOrder) -> DenseTransform:
    """Kernel approximation K_z(x_j, x_k) * dx on the asymptotic grid.

    Approaches frft_matrix entrywise as n grows for fixed z strictly inside
    the unit disk.
    """
    _guard_dense_size(n)
    grid = asymptotic_zeros(n)
    x = grid.nodes
    entries = mehler_kernel(order, x[:, None], x[None, :]) * grid.spacing
    return DenseTransform(
        n=n, entries=entries, provenance="chirp_factored", detail=complex(order.z)
    )


def dense_lct_matrix(n: int, params: LctParams) -> DenseTransform:
    """Materialized LCT matrix L = S1 F S2 on the asymptotic grid.

    S2 = diag(exp(i a x_k^2/(2b))), S1 = diag(exp(i d y_j^2/(2b)) /
    sqrt(2*pi*i*b)) with y_j = 4 b x_j / pi, and F the scaled Fourier kernel
    matrix (calibrated sign, identical to the fast path's).  Applying L to a
    sample vector reproduces fast_lct up to rounding, arithmetic reordered.
    """
    _guard_dense_size(n)
    if params.b == 0:
        raise DegenerateParameterError("b = 0 has no kernel matrix; use lct_b_zero")
    x = asymptotic_zeros(n).nodes
    y = (4.0 * params.b / np.pi) * x
    entries = (
        output_chirp(params.d, params.b, y)[:, None]
        * scaled_fourier_matrix(n)
        * input_chirp(params.a, params.b, x)[None, :]
    )
    return DenseTransform(
        n=n, entries=entries, provenance="lct", detail=params.as_tuple()
    )
