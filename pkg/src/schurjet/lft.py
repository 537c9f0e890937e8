"""The 2x2 inner coefficient matrix and the reduction it induces.

In the indeterminate regime (unimodular leading coefficient, positive
definite Pick matrix) every solution is a linear-fractional image of a
Schur-class parameter under a 2x2 rational inner matrix function built from
the state data below.  Entries are never expanded symbolically: every value
and every jet comes from linear solves against the resolvent
``pick_plus - z * pick * shift*``, which is both numerically stable and a
single code path for all sizes.

`reduce_problem` converts leftover interpolation conditions (data beyond
order 2n-1) into an equivalent jet condition on the parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    DegenerateSystemError,
    InconsistencyError,
    PoleError,
    PreconditionError,
    UsageError,
)
from .functions import AnalyticFunction, LftComposite, LftPreimage
from .jets import Jet
from .psd import DEFAULT_TOL, psd_rank
from .structured import BoundaryJet, pick_matrix

_INNER_TOL = 1e-8


def _shift_matrix(t0: complex, n: int) -> np.ndarray:
    T = np.eye(n, dtype=complex) * t0
    for i in range(1, n):
        T[i, i - 1] = 1.0
    return T


@dataclass(frozen=True, eq=False)
class CoefficientMatrix:
    """State data of the 2x2 inner matrix function of size-n problems."""

    t0: complex
    shift: np.ndarray       # lower bidiagonal, diagonal t0, subdiagonal 1
    unit: np.ndarray        # first coordinate vector
    column: np.ndarray      # jet coefficients s_0..s_{n-1}
    pick: np.ndarray        # positive definite Pick matrix
    pick_plus: np.ndarray   # pick + column column*
    alpha: float
    beta: float

    @property
    def n(self) -> int:
        return self.column.size

    # -- internal precomputations ------------------------------------------

    @property
    def _resolvent_slope(self) -> np.ndarray:
        return self.pick @ self.shift.conj().T

    @property
    def _shifted_unit(self) -> np.ndarray:
        # shift^{-1} unit, solved once; the shift matrix is unit lower bidiagonal.
        return np.linalg.solve(self.shift, self.unit)

    @property
    def _shift_column(self) -> np.ndarray:
        return self.shift @ self.column

    @property
    def _weighted_column(self) -> np.ndarray:
        # pick_plus pick^{-1} column; both factors Hermitian.
        return self.pick_plus @ np.linalg.solve(self.pick, self.column)

    # -- evaluation ---------------------------------------------------------

    def entry_values(self, z):
        """Values (a, b, c, d) at a scalar or 1-d array of points."""
        zarr = np.atleast_1d(np.asarray(z, dtype=complex))
        n = self.n
        A = self.pick_plus[None, :, :] - zarr[:, None, None] * self._resolvent_slope[None, :, :]
        try:
            X = np.linalg.solve(A, np.broadcast_to(
                self.column.reshape(1, n, 1), (zarr.size, n, 1)).copy())[:, :, 0]
            Y = np.linalg.solve(A, np.broadcast_to(
                self._shifted_unit.reshape(1, n, 1), (zarr.size, n, 1)).copy())[:, :, 0]
        except np.linalg.LinAlgError as exc:
            raise PoleError("resolvent is singular at an evaluation point") from exc
        a = X[:, 0]
        b = self.beta * (1.0 - zarr * Y[:, 0])
        c = self.alpha * (1.0 - zarr * (X @ np.conj(self._shift_column)))
        d = zarr * self.alpha * self.beta * (Y @ np.conj(self._weighted_column))
        if np.asarray(z).shape:
            return a, b, c, d
        return complex(a[0]), complex(b[0]), complex(c[0]), complex(d[0])

    def entry_jets(self, center: complex, order: int):
        """Jets of (a, b, c, d) about any point where the resolvent is regular."""
        center = complex(center)
        A0 = self.pick_plus - center * self._resolvent_slope
        slope = self._resolvent_slope
        try:
            xs = [np.linalg.solve(A0, self.column)]
            ys = [np.linalg.solve(A0, self._shifted_unit)]
            for _ in range(order):
                xs.append(np.linalg.solve(A0, slope @ xs[-1]))
                ys.append(np.linalg.solve(A0, slope @ ys[-1]))
        except np.linalg.LinAlgError as exc:
            raise DegenerateSystemError(
                f"resolvent is singular at {center}; cannot expand there"
            ) from exc
        zj = Jet.variable(center, order)
        tmc = np.conj(self._shift_column)
        wc = np.conj(self._weighted_column)
        a = Jet(center, [x[0] for x in xs])
        b = self.beta * (1.0 - zj * Jet(center, [y[0] for y in ys]))
        c = self.alpha * (1.0 - zj * Jet(center, [x @ tmc for x in xs]))
        d = self.alpha * self.beta * (zj * Jet(center, [y @ wc for y in ys]))
        return a, b, c, d

    # -- diagnostics ---------------------------------------------------------

    def unitary_residual(self, samples: int = 128) -> float:
        """max over circle samples of the entrywise defect of S* S = I."""
        z = np.exp(2j * np.pi * np.arange(samples) / samples)
        a, b, c, d = self.entry_values(z)
        g11 = np.abs(a) ** 2 + np.abs(c) ** 2 - 1.0
        g22 = np.abs(b) ** 2 + np.abs(d) ** 2 - 1.0
        g12 = np.conj(a) * b + np.conj(c) * d
        return float(max(np.max(np.abs(g11)), np.max(np.abs(g22)),
                         np.max(np.abs(g12))))

    @classmethod
    def from_state(cls, t0: complex, column, pick, tol: float = DEFAULT_TOL,
                   validate: bool = True) -> "CoefficientMatrix":
        """Assemble from the base point, jet column s_0..s_{n-1}, and Pick matrix."""
        t0 = complex(t0)
        M = np.atleast_1d(np.asarray(column, dtype=complex))
        P = np.asarray(pick, dtype=complex)
        n = M.size
        if P.shape != (n, n):
            raise UsageError("pick matrix size must match the column length")
        rep = psd_rank(P, tol)
        if not (rep.hermitian and rep.psd and rep.rank == n):
            raise PreconditionError(
                "coefficient matrix needs a Hermitian positive definite Pick matrix"
            )
        T = _shift_matrix(t0, n)
        E = np.zeros(n, dtype=complex)
        E[0] = 1.0
        Pt = P + np.outer(M, np.conj(M))
        alpha_sq = float((1.0 - np.vdot(M, np.linalg.solve(Pt, M))).real)
        beta_sq = float((1.0 - np.linalg.solve(Pt, E)[0]).real)
        if not (0.0 < alpha_sq <= 1.0 + 1e-12 and 0.0 < beta_sq <= 1.0 + 1e-12):
            raise PreconditionError(
                f"normalizers out of range: alpha^2={alpha_sq}, beta^2={beta_sq}"
            )
        self = cls(t0=t0, shift=T, unit=E, column=M, pick=P, pick_plus=Pt,
                   alpha=float(np.sqrt(min(alpha_sq, 1.0))),
                   beta=float(np.sqrt(min(beta_sq, 1.0))))
        if validate:
            res = self.unitary_residual()
            if res > _INNER_TOL:
                raise InconsistencyError(
                    f"coefficient matrix failed the inner check: residual {res:.3e}"
                )
        return self


def build_lft(data: BoundaryJet, n: int, tol: float = DEFAULT_TOL,
              validate: bool = True) -> CoefficientMatrix:
    """Coefficient matrix of the size-n parametrization of the given data.

    Requires a unimodular leading coefficient and a positive definite Pick
    matrix at size n (raises `PreconditionError` otherwise).
    """
    if abs(abs(data.coeffs[0]) - 1.0) > tol:
        raise PreconditionError("parametrization needs |s_0| = 1")
    P = pick_matrix(data, n)
    return CoefficientMatrix.from_state(data.t0, data.coeffs[:n], P,
                                        tol=tol, validate=validate)


def lft_apply(matrix: CoefficientMatrix, param: AnalyticFunction) -> LftComposite:
    """The solution generated by a Schur-class parameter."""
    return LftComposite(matrix, param)


def lft_invert(matrix: CoefficientMatrix, f: AnalyticFunction) -> LftPreimage:
    """The parameter generating ``f`` (the transform is one-to-one)."""
    return LftPreimage(matrix, f)


@dataclass(frozen=True)
class ReducedProblem:
    """Jet condition on the parameter equivalent to the leftover data.

    ``analytic`` is False exactly when the reduced function has a pole at
    the base point, which certifies unsolvability of the original problem.
    ``target`` holds its jet coefficients (length N - 2n + 1) and ``value``
    the closed-form constant term; the two agree to working precision.
    """

    analytic: bool
    target: Optional[np.ndarray]
    value: Optional[complex]
    denom_margin: float


def reduce_problem(data: BoundaryJet, n: int, matrix: CoefficientMatrix,
                   tol: float = DEFAULT_TOL) -> ReducedProblem:
    """Reduce order-N data (N >= 2n) to a jet target for the parameter."""
    N = data.order
    if N < 2 * n:
        raise UsageError("reduction needs data of order at least 2n")
    K = N - 2 * n
    t0 = data.t0
    s = data.coeffs
    ja, jb, jc, jd = matrix.entry_jets(t0, N)

    F = Jet(t0, s[2 * n:] - ja.coeffs[2 * n:])
    B = Jet(t0, jb.coeffs[n: n + K + 1])
    C = Jet(t0, jc.coeffs[n: n + K + 1])
    D = Jet(t0, jd.coeffs[: K + 1])
    denom = B * C + D * F

    bn_cn = jb.coeffs[n] * jc.coeffs[n]
    scale = max(1.0, abs(bn_cn), abs(F.coeffs[0]))
    margin = float(abs(denom.coeffs[0]))
    if margin <= tol * scale:
        return ReducedProblem(analytic=False, target=None, value=None,
                              denom_margin=margin)

    target = (F / denom).coeffs
    d0 = jd.coeffs[0]
    cn = jc.coeffs[n]
    diff = s[2 * n] - ja.coeffs[2 * n]
    den = (-1.0) ** (n - 1) * np.conj(t0) ** (2 * n) * abs(cn) ** 2 * s[0] + diff
    value = complex(np.conj(d0) * diff / den)
    return ReducedProblem(analytic=True, target=target, value=value,
                          denom_margin=margin)
