"""Structured matrices attached to a boundary jet.

Everything here is an explicit polynomial expression in the jet data: the
lower-triangular Toeplitz and Hankel coefficient matrices, the upper
triangular matrix of signed binomials in powers of the base point, their
product (the boundary Pick matrix whose positivity governs solvability),
the bordering entries of the one-step extension, and the conjugation
identity that characterizes Hermitian Pick matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import InputError, InsufficientDataError, UsageError

# How far off the unit circle a base point may sit before rejection.
CIRCLE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class BoundaryJet:
    """Problem data: a unimodular base point and jet coefficients s_0..s_N."""

    t0: complex
    coeffs: np.ndarray

    def __init__(self, t0: complex, coeffs) -> None:
        t0 = complex(t0)
        r = abs(t0)
        if abs(r - 1.0) > CIRCLE_TOL:
            raise InputError(f"base point must lie on the unit circle, |t0|={r}")
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise InputError("jet coefficients must form a nonempty 1-d sequence")
        arr.setflags(write=False)
        object.__setattr__(self, "t0", t0 / r)
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def truncated(self, order: int) -> "BoundaryJet":
        if order > self.order:
            raise InsufficientDataError(
                f"cannot truncate order-{self.order} data to order {order}"
            )
        return BoundaryJet(self.t0, self.coeffs[: order + 1])

    def __repr__(self) -> str:
        return f"BoundaryJet(t0={self.t0!r}, coeffs={list(self.coeffs)!r})"


def _psi_entry(t0: complex, j: int, ell: int) -> complex:
    # 1-based indices; upper triangular.
    if j > ell:
        return 0.0
    return (-1.0) ** (ell - 1) * comb(ell - 1, j - 1) * t0 ** (ell + j - 1)


def signed_binomial_matrix(t0: complex, n: int) -> np.ndarray:
    """Upper triangular matrix of signed binomials in powers of ``t0``."""
    t0 = complex(t0)
    if abs(abs(t0) - 1.0) > CIRCLE_TOL:
        raise InputError(f"base point must lie on the unit circle, |t0|={abs(t0)}")
    if n < 1:
        raise UsageError("matrix size must be at least 1")
    out = np.zeros((n, n), dtype=complex)
    for j in range(1, n + 1):
        for ell in range(j, n + 1):
            out[j - 1, ell - 1] = _psi_entry(t0, j, ell)
    return out


def lower_toeplitz(data: BoundaryJet, n: int) -> np.ndarray:
    """Lower triangular Toeplitz matrix with first column s_0..s_{n-1}."""
    if n > data.order + 1:
        raise InsufficientDataError(f"size {n} needs {n} coefficients, have {data.order + 1}")
    if n < 1:
        raise UsageError("matrix size must be at least 1")
    s = data.coeffs
    out = np.zeros((n, n), dtype=complex)
    for j in range(n):
        out[j:, j] = s[: n - j]
    return out


def coeff_hankel(data: BoundaryJet, n: int) -> np.ndarray:
    """Hankel matrix with entry (j, k) = s_{j+k-1} (1-based)."""
    if 2 * n - 1 > data.order:
        raise InsufficientDataError(
            f"size {n} needs coefficients through s_{2 * n - 1}, have order {data.order}"
        )
    if n < 1:
        raise UsageError("matrix size must be at least 1")
    s = data.coeffs
    return np.array([[s[j + k + 1] for k in range(n)] for j in range(n)], dtype=complex)


def pick_matrix(data: BoundaryJet, n: int) -> np.ndarray:
    """Boundary Pick matrix: Hankel times signed-binomial times Toeplitz-adjoint."""
    H = coeff_hankel(data, n)
    psi = signed_binomial_matrix(data.t0, n)
    U = lower_toeplitz(data, n)
    return H @ psi @ U.conj().T


def pick_entry(data: BoundaryJet, i: int, j: int) -> complex:
    """Single Pick-matrix entry (1-based); defined whenever i + j <= N + 1."""
    if i < 1 or j < 1:
        raise UsageError("entry indices are 1-based")
    if i + j > data.order + 2:
        raise InsufficientDataError(
            f"entry ({i},{j}) needs coefficients through s_{i + j - 1}, "
            f"have order {data.order}"
        )
    s, t0 = data.coeffs, data.t0
    total = 0.0 + 0.0j
    for r in range(1, j + 1):
        inner = sum(s[i + ell - 1] * _psi_entry(t0, ell, r) for ell in range(1, r + 1))
        total += inner * np.conj(s[j - r])
    return complex(total)


@dataclass(frozen=True)
class StructuredSet:
    """The size-n matrix family of one data set, built along the product route."""

    n: int
    toeplitz: np.ndarray
    hankel: np.ndarray
    weights: np.ndarray
    pick: np.ndarray


def structured_set(data: BoundaryJet, n: int) -> StructuredSet:
    H = coeff_hankel(data, n)
    psi = signed_binomial_matrix(data.t0, n)
    U = lower_toeplitz(data, n)
    return StructuredSet(n=n, toeplitz=U, hankel=H, weights=psi, pick=H @ psi @ U.conj().T)


@dataclass(frozen=True)
class ExtensionData:
    """Bordering quantities of the one-step extension of a size-n Pick matrix.

    ``column`` holds the n fully determined entries of column n+1;
    ``next_lower``/``next_upper`` are the (n+1, n) and (n, n+1) entries, split
    into the part linear in s_{2n} plus a data-only offset; ``skew`` is the
    real part of ``t0 * (next_lower - conj(next_upper))`` whose sign routes
    the indeterminate classification, with the imaginary remainder reported.
    """

    n: int
    column: np.ndarray
    next_lower: complex
    next_upper: complex
    lower_offset: complex
    upper_offset: complex
    skew: float
    skew_imag: float


def extension_data(data: BoundaryJet, n: int) -> ExtensionData:
    """All bordering entries determined by the data; requires 2n <= N."""
    if 2 * n > data.order:
        raise InsufficientDataError(
            f"extension at size {n} needs coefficients through s_{2 * n}, "
            f"have order {data.order}"
        )
    s, t0 = data.coeffs, data.t0
    column = np.array([pick_entry(data, i, n + 1) for i in range(1, n + 1)])

    lower_offset = 0.0 + 0.0j
    for r in range(1, n):
        for ell in range(1, r + 1):
            lower_offset += s[n + ell] * _psi_entry(t0, ell, r) * np.conj(s[n - r])
    for ell in range(1, n):
        lower_offset += s[n + ell] * _psi_entry(t0, ell, n) * np.conj(s[0])

    upper_offset = 0.0 + 0.0j
    for r in range(1, n + 1):
        for ell in range(1, r + 1):
            upper_offset += s[n + ell - 1] * _psi_entry(t0, ell, r) * np.conj(s[n + 1 - r])
    for ell in range(1, n + 1):
        upper_offset += s[n + ell - 1] * _psi_entry(t0, ell, n + 1) * np.conj(s[0])

    sign = (-1.0) ** (n - 1)
    next_lower = sign * t0 ** (2 * n - 1) * s[2 * n] * np.conj(s[0]) + lower_offset
    next_upper = -sign * t0 ** (2 * n + 1) * s[2 * n] * np.conj(s[0]) + upper_offset
    gap = t0 * (next_lower - np.conj(next_upper))
    return ExtensionData(
        n=n,
        column=column,
        next_lower=complex(next_lower),
        next_upper=complex(next_upper),
        lower_offset=complex(lower_offset),
        upper_offset=complex(upper_offset),
        skew=float(gap.real),
        skew_imag=float(gap.imag),
    )


def symmetry_residual(data: BoundaryJet, n: int) -> float:
    """Frobenius residual of the size-2n conjugation identity.

    The residual vanishes exactly when |s_0| = 1 and the size-n Pick matrix
    is Hermitian, so it doubles as an independent Hermitian-ness probe.
    """
    if 2 * n - 1 > data.order:
        raise InsufficientDataError(
            f"identity at size {n} needs coefficients through s_{2 * n - 1}, "
            f"have order {data.order}"
        )
    U = lower_toeplitz(data, 2 * n)
    psi = signed_binomial_matrix(data.t0, 2 * n)
    return float(np.linalg.norm(U @ psi @ U.conj() - psi))
