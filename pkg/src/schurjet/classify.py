"""Solvability classification for boundary jet interpolation.

The decision tree: an off-circle leading coefficient settles the problem at
once; on the circle, the greatest order with a Hermitian Pick matrix is
located (Hermitian-ness is downward closed by nesting, so the incremental
scan is exact), positivity is tested there, and the singular/definite cases
are routed by the parity gap between the data order and the matrix size,
the rank chain, and the sign of the extension skew.

Independent low-order fast paths (`classify_order1`, `classify_order2`)
reimplement the first- and second-order answers directly and serve as
oracles for the general routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .psd import (
    DEFAULT_TOL,
    PsdReport,
    in_fragile_band,
    matrix_scale,
    psd_rank,
    singular_rank,
)
from .structured import BoundaryJet, extension_data, pick_matrix


class Verdict(Enum):
    NO_SOLUTION = "no-solution"
    UNIQUE = "unique"
    INFINITE = "infinite"


_REASONS = {
    "none_modulus": "leading coefficient has modulus greater than one",
    "none_order1": "first-order positivity fails (non-real or negative angular derivative)",
    "none_not_psd": "Pick matrix at order {n} is Hermitian but not positive semidefinite",
    "none_odd_rank_jump": "singular Pick matrix and the rank increases at the last order",
    "none_even_extension": "singular Pick matrix admits no positive bordered extension",
    "none_deep_singular": "singular Pick matrix with more data than the singular case supports",
    "none_skew_negative": "extension skew is negative",
    "none_skew_zero_deep": "extension skew vanishes but deeper data is prescribed",
    "interior": "leading coefficient lies inside the open disk",
    "trivial_order0": "order-zero data with unimodular value",
    "unique_odd_rank_chain": "singular Pick matrix with stabilized rank chain",
    "unique_even_extension": "singular Pick matrix with a consistent bordered extension",
    "infinite_maximal": "positive definite Pick matrix at maximal order",
    "infinite_even_skew": "positive definite Pick matrix and nonnegative extension skew",
    "infinite_deep_skew": "positive definite Pick matrix and positive extension skew",
}


@dataclass(frozen=True)
class Classification:
    """Outcome of the decision tree, with the evidence that produced it."""

    verdict: Verdict
    case_tag: str
    n: int
    rank: Optional[int]
    skew: Optional[float]
    skew_imag: Optional[float]
    fragile: bool
    s0_abs: float
    tol: float
    reports: tuple[PsdReport, ...]

    @property
    def reason(self) -> str:
        return _REASONS[self.case_tag].format(n=self.n)

    @property
    def solvable(self) -> bool:
        return self.verdict is not Verdict.NO_SOLUTION


def _make(verdict, tag, *, n=0, rank=None, skew=None, skew_imag=None,
          fragile=False, s0_abs, tol, reports=()):
    return Classification(
        verdict=verdict,
        case_tag=tag,
        n=n,
        rank=rank,
        skew=skew,
        skew_imag=skew_imag,
        fragile=fragile,
        s0_abs=float(s0_abs),
        tol=float(tol),
        reports=tuple(reports),
    )


def classify(data: BoundaryJet, tol: float = DEFAULT_TOL) -> Classification:
    """Full classification of a boundary jet problem.

    Case tags, all documented in the README: ``interior``, ``trivial_order0``,
    ``unique_odd_rank_chain``, ``unique_even_extension``, ``infinite_maximal``,
    ``infinite_even_skew``, ``infinite_deep_skew``, and the ``none_*`` family.
    """
    s = data.coeffs
    N = data.order
    s0_abs = abs(s[0])
    fragile = in_fragile_band(s0_abs - 1.0, tol)

    if s0_abs > 1.0 + tol:
        return _make(Verdict.NO_SOLUTION, "none_modulus",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    if s0_abs < 1.0 - tol:
        return _make(Verdict.INFINITE, "interior",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    if N == 0:
        return _make(Verdict.INFINITE, "trivial_order0",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)

    # Greatest order with a Hermitian Pick matrix (downward closed).
    reports: list[PsdReport] = []
    m = 0
    for k in range(1, (N + 1) // 2 + 1):
        rep = psd_rank(pick_matrix(data, k), tol)
        if not rep.hermitian:
            fragile = fragile or in_fragile_band(rep.herm_residual, tol * rep.scale)
            break
        reports.append(rep)
        m = k

    if m == 0:
        return _make(Verdict.NO_SOLUTION, "none_order1",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)

    top = reports[-1]
    fragile = fragile or any(r.fragile for r in reports)

    if not top.psd:
        psd_orders = [k + 1 for k, r in enumerate(reports) if r.psd]
        tag = "none_order1" if m == 1 else "none_not_psd"
        return _make(Verdict.NO_SOLUTION, tag, n=max(psd_orders, default=0),
                     rank=top.rank, fragile=fragile, s0_abs=s0_abs, tol=tol,
                     reports=reports)

    n = m
    rank = top.rank

    if rank < n:
        if N == 2 * n - 1:
            prev_rank = reports[n - 2].rank if n >= 2 else 0
            if rank == prev_rank:
                verdict, tag = Verdict.UNIQUE, "unique_odd_rank_chain"
            else:
                verdict, tag = Verdict.NO_SOLUTION, "none_odd_rank_jump"
            return _make(verdict, tag, n=n, rank=rank, fragile=fragile,
                         s0_abs=s0_abs, tol=tol, reports=reports)
        if N == 2 * n:
            ext = extension_data(data, n)
            P = pick_matrix(data, n)
            scale = matrix_scale(P, ext.column,
                                 [ext.next_lower, ext.next_upper])
            gap = abs(ext.next_lower - np.conj(ext.next_upper))
            fragile = fragile or in_fragile_band(gap, tol * scale)
            symmetric = gap <= tol * scale
            base_rank = singular_rank(P, tol, scale)
            aug_rank = singular_rank(np.column_stack([P, ext.column]), tol, scale)
            if symmetric and aug_rank == base_rank:
                verdict, tag = Verdict.UNIQUE, "unique_even_extension"
            else:
                verdict, tag = Verdict.NO_SOLUTION, "none_even_extension"
            return _make(verdict, tag, n=n, rank=rank, skew=ext.skew,
                         skew_imag=ext.skew_imag, fragile=fragile,
                         s0_abs=s0_abs, tol=tol, reports=reports)
        return _make(Verdict.NO_SOLUTION, "none_deep_singular", n=n, rank=rank,
                     fragile=fragile, s0_abs=s0_abs, tol=tol, reports=reports)

    # Positive definite at order n.
    if N == 2 * n - 1:
        return _make(Verdict.INFINITE, "infinite_maximal", n=n, rank=rank,
                     fragile=fragile, s0_abs=s0_abs, tol=tol, reports=reports)

    ext = extension_data(data, n)
    scale = max(1.0, abs(ext.next_lower), abs(ext.next_upper))
    skew = ext.skew
    fragile = fragile or in_fragile_band(skew, tol * scale)
    if N == 2 * n:
        if skew >= -tol * scale:
            verdict, tag = Verdict.INFINITE, "infinite_even_skew"
        else:
            verdict, tag = Verdict.NO_SOLUTION, "none_skew_negative"
    elif skew > tol * scale:
        verdict, tag = Verdict.INFINITE, "infinite_deep_skew"
    elif skew < -tol * scale:
        verdict, tag = Verdict.NO_SOLUTION, "none_skew_negative"
    else:
        verdict, tag = Verdict.NO_SOLUTION, "none_skew_zero_deep"
        fragile = True
    return _make(verdict, tag, n=n, rank=rank, skew=skew,
                 skew_imag=ext.skew_imag, fragile=fragile, s0_abs=s0_abs,
                 tol=tol, reports=reports)


def classify_order1(t0: complex, s0: complex, s1: complex,
                    tol: float = DEFAULT_TOL) -> Classification:
    """Independent first-order answer (data of order N = 1)."""
    s0_abs = abs(s0)
    fragile = in_fragile_band(s0_abs - 1.0, tol)
    if s0_abs > 1.0 + tol:
        return _make(Verdict.NO_SOLUTION, "none_modulus",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    if s0_abs < 1.0 - tol:
        return _make(Verdict.INFINITE, "interior",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    x = complex(t0) * complex(s1) * np.conj(complex(s0))
    scale = max(1.0, abs(x))
    fragile = fragile or in_fragile_band(x.imag, tol * scale) \
        or in_fragile_band(x.real, tol * scale)
    if abs(x.imag) > tol * scale or x.real < -tol * scale:
        return _make(Verdict.NO_SOLUTION, "none_order1",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    if x.real <= tol * scale:
        return _make(Verdict.UNIQUE, "unique_odd_rank_chain", n=1, rank=0,
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    return _make(Verdict.INFINITE, "infinite_maximal", n=1, rank=1,
                 fragile=fragile, s0_abs=s0_abs, tol=tol)


def classify_order2(t0: complex, s0: complex, s1: complex, s2: complex,
                    tol: float = DEFAULT_TOL) -> Classification:
    """Independent second-order answer (data of order N = 2).

    The published closed-form inequality for this order is derived under a
    strictly positive angular derivative; at the degenerate edge s1 = 0 it
    would declare some unsolvable problems solvable.  This path follows the
    general theorem instead: with s1 = 0 the problem needs s2 = 0, in which
    case the constant is the unique solution.
    """
    t0 = complex(t0)
    s0, s1, s2 = complex(s0), complex(s1), complex(s2)
    s0_abs = abs(s0)
    fragile = in_fragile_band(s0_abs - 1.0, tol)
    if s0_abs > 1.0 + tol:
        return _make(Verdict.NO_SOLUTION, "none_modulus",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    if s0_abs < 1.0 - tol:
        return _make(Verdict.INFINITE, "interior",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    x = t0 * s1 * np.conj(s0)
    scale = max(1.0, abs(x))
    if abs(x.imag) > tol * scale or x.real < -tol * scale:
        fragile = fragile or in_fragile_band(x.imag, tol * scale) \
            or in_fragile_band(x.real, tol * scale)
        return _make(Verdict.NO_SOLUTION, "none_order1",
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    if x.real <= tol * scale:
        # Degenerate angular derivative: solvable only by the constant.
        if abs(s2) <= tol * max(1.0, abs(s2)):
            return _make(Verdict.UNIQUE, "unique_even_extension", n=1, rank=0,
                         fragile=fragile, s0_abs=s0_abs, tol=tol)
        return _make(Verdict.NO_SOLUTION, "none_even_extension", n=1, rank=0,
                     fragile=fragile, s0_abs=s0_abs, tol=tol)
    skew = 2.0 * (t0 ** 2 * np.conj(s0) * s2).real - abs(s1) ** 2 + x.real
    scale_u = max(1.0, 2.0 * abs(s2), abs(s1) ** 2, x.real)
    fragile = fragile or in_fragile_band(skew, tol * scale_u)
    if skew >= -tol * scale_u:
        return _make(Verdict.INFINITE, "infinite_even_skew", n=1, rank=1,
                     skew=float(skew), skew_imag=0.0, fragile=fragile,
                     s0_abs=s0_abs, tol=tol)
    return _make(Verdict.NO_SOLUTION, "none_skew_negative", n=1, rank=1,
                 skew=float(skew), skew_imag=0.0, fragile=fragile,
                 s0_abs=s0_abs, tol=tol)
