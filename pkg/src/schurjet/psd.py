"""Hermitian tests, positive semidefiniteness, numerical rank, range checks.

All thresholds are relative to ``scale = max(1, largest entry modulus)``:
jet coefficients grow with Blaschke degree, so absolute tolerances would be
meaningless.  Any quantity that lands within a factor of ten of its
threshold marks the report as fragile; the classifier propagates that flag
so users can see when a verdict sits near a case boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import UsageError

DEFAULT_TOL = 1e-9


def matrix_scale(*arrays) -> float:
    """max(1, largest entry modulus over all supplied arrays)."""
    top = 1.0
    for a in arrays:
        a = np.asarray(a)
        if a.size:
            top = max(top, float(np.max(np.abs(a))))
    return top


def in_fragile_band(value: float, threshold: float) -> bool:
    """True when |value| is within a factor 10 of the decision threshold."""
    v = abs(value)
    return threshold / 10.0 < v < threshold * 10.0


@dataclass(frozen=True)
class PsdReport:
    hermitian: bool
    herm_residual: float
    psd: bool
    rank: int
    min_eig: float
    eigs: Optional[np.ndarray]
    scale: float
    fragile: bool


def hermitian_test(M, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Entrywise residual max |M - M*|; Hermitian iff within tol * scale."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise UsageError("hermitian test needs a square matrix")
    residual = float(np.max(np.abs(M - M.conj().T)))
    return residual <= tol * matrix_scale(M), residual


def psd_rank(M, tol: float = DEFAULT_TOL) -> PsdReport:
    """Eigenvalue-based PSD and rank report (matrix is symmetrized first)."""
    M = np.asarray(M, dtype=complex)
    hermitian, residual = hermitian_test(M, tol)
    sym = 0.5 * (M + M.conj().T)
    eigs = np.linalg.eigvalsh(sym)
    scale = matrix_scale(M)
    threshold = tol * scale
    min_eig = float(eigs[0]) if eigs.size else 0.0
    psd = min_eig >= -threshold
    rank = int(np.sum(eigs > threshold))
    fragile = (not hermitian and in_fragile_band(residual, threshold)) or any(
        in_fragile_band(float(e), threshold) for e in eigs
    )
    return PsdReport(
        hermitian=hermitian,
        herm_residual=residual,
        psd=psd,
        rank=rank,
        min_eig=min_eig,
        eigs=eigs,
        scale=scale,
        fragile=fragile,
    )


def singular_rank(M, tol: float = DEFAULT_TOL, scale: float | None = None) -> int:
    """Numerical rank by singular values; works for non-square blocks."""
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return 0
    svals = np.linalg.svd(M, compute_uv=False)
    if scale is None:
        scale = matrix_scale(M)
    return int(np.sum(svals > tol * scale))


def range_consistency(P, B, tol: float = DEFAULT_TOL):
    """Whether the column B lies in the range of the Hermitian PSD matrix P.

    Returns ``(consistent, X)`` where X is a least-squares solution of
    ``P X = B`` with residual at most ``tol * scale`` when consistent, else
    ``(False, None)``.
    """
    P = np.asarray(P, dtype=complex)
    B = np.asarray(B, dtype=complex).reshape(-1)
    if P.shape[0] != B.size:
        raise UsageError("column length must match the matrix size")
    scale = matrix_scale(P, B)
    base_rank = singular_rank(P, tol, scale)
    aug_rank = singular_rank(np.column_stack([P, B]), tol, scale)
    if aug_rank != base_rank:
        return False, None
    X, *_ = np.linalg.lstsq(P, B, rcond=None)
    if np.max(np.abs(P @ X - B)) > tol * scale:
        return False, None
    return True, X
