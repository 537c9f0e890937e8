"""Solution construction for every solvable branch.

The determinate route builds the parametrization at the rank level and
feeds it the (necessarily unimodular) reduced constant; a final jet gate
makes the construction self-checking.  Indeterminate branches emit fixed,
documented parameter families so output is deterministic for a given
sample count.  Interior-style jet matching (a Schur-class polynomial with
prescribed jet and sub-unit circle sup) is done by constrained minimax
fitting with degree escalation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .classify import Classification, Verdict, classify
from .errors import ConstructionError, InconsistencyError, PreconditionError, UsageError
from .functions import AnalyticFunction, Constant, LftComposite, Polynomial
from .lft import CoefficientMatrix, build_lft, reduce_problem
from .psd import DEFAULT_TOL
from .structured import BoundaryJet
from .verify import disk_sup_norm, verify_asymptotics

#: circle sup-norm bound guaranteed by the polynomial jet constructor
FIT_BOUND = 1.0 - 1e-6
#: degree cap of the escalating fit; reaching it raises ConstructionError
FIT_MAX_DEGREE = 512
#: Schur-membership slack for emitted solutions
SUP_SLACK = 1e-8


def _tail_minimax(base, cols):
    """Best tail coefficients for min-sup of |base + cols @ q| on the grid.

    Runs a Lawson (multiplicative-weight) sweep and an L^p continuation
    sweep from the same least-squares start and keeps whichever visited
    iterate has the smallest grid sup.  Neither is guaranteed optimal; the
    caller escalates the degree until the bound is met.
    """
    m = base.size
    best_q, best_sup = None, np.inf

    def consider(q):
        nonlocal best_q, best_sup
        sup = float(np.max(np.abs(base + cols @ q)))
        if sup < best_sup:
            best_q, best_sup = q, sup
        return sup

    q0, *_ = np.linalg.lstsq(cols, -base, rcond=None)
    consider(q0)

    w = np.full(m, 1.0 / m)
    q = q0
    for _ in range(60):
        res = np.abs(base + cols @ q)
        w = w * np.maximum(res, 1e-300)
        w /= w.sum()
        sw = np.sqrt(w)
        q, *_ = np.linalg.lstsq(cols * sw[:, None], -base * sw, rcond=None)
        consider(q)

    q = q0
    for p in (4, 8, 16, 32, 64, 128):
        for _ in range(8):
            res = np.abs(base + cols @ q)
            top = max(float(res.max()), 1e-300)
            w = np.maximum(res / top, 1e-12) ** ((p - 2) / 2.0)
            w /= w.sum()
            sw = np.sqrt(w)
            q, *_ = np.linalg.lstsq(cols * sw[:, None], -base * sw, rcond=None)
            consider(q)
    return best_q, best_sup


def fit_schur_polynomial(t0: complex, coeffs: Sequence[complex],
                         bound: float = FIT_BOUND,
                         max_degree: int = FIT_MAX_DEGREE) -> AnalyticFunction:
    """Polynomial with the given jet at ``t0`` and circle grid sup <= bound.

    Exists for any target with ``|coeffs[0]| < 1`` at a large enough degree;
    the achievable sup at a fixed degree decreases toward ``|coeffs[0]|``,
    so the degree doubles until the bound is met (`ConstructionError` past
    ``max_degree``).  The jet is matched exactly by construction: the fitted
    tail starts at order ``len(coeffs)``.  Grid sup is the documented
    surrogate for the true sup; the final check runs on a 4x finer grid
    than the fit.
    """
    t0 = complex(t0)
    r = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    K = r.size - 1
    if abs(r[0]) > bound:
        raise PreconditionError(
            f"jet constant term must satisfy |r0| <= {bound}, got {abs(r[0])}"
        )
    if K == 0 or not np.any(r[1:]):
        return Constant(r[0])

    degree = 2 * (K + 1)
    while degree <= max_degree:
        m = max(256, 8 * degree)
        z = np.exp(2j * np.pi * np.arange(m) / m)
        u = z - t0
        base = np.zeros_like(z)
        for c in r[::-1]:
            base = base * u + c
        # tail basis ((z - t0)/2)^(K+1+j): bounded by 1 on the circle
        cols = ((u / 2.0)[:, None]) ** (K + 1 + np.arange(degree - K))
        q, sup = _tail_minimax(base, cols)
        if sup <= bound:
            tail = q / 2.0 ** (K + 1 + np.arange(q.size))
            poly = Polynomial(t0, np.concatenate([r, tail]))
            if disk_sup_norm(poly, grid=4 * m) <= bound:
                return poly
        degree *= 2
    raise ConstructionError(
        f"no degree <= {max_degree} polynomial met the sup bound {bound} "
        f"for the requested jet"
    )


def unique_solution(data: BoundaryJet, cls: Classification,
                    tol: float = DEFAULT_TOL) -> AnalyticFunction:
    """The single solution in the determinate case.

    Level-d construction (d = rank): the parametrization built from the
    first 2d coefficients is fed the reduced constant, which must be
    unimodular there; the result is gated by an exact jet comparison
    against all N+1 prescribed coefficients.
    """
    if cls.verdict is not Verdict.UNIQUE:
        raise UsageError("unique_solution needs a 'unique' classification")
    d = cls.rank or 0
    s = data.coeffs
    if d == 0:
        f: AnalyticFunction = Constant(s[0])
    else:
        matrix = build_lft(data.truncated(2 * d - 1), d, tol)
        red = reduce_problem(data.truncated(2 * d), d, matrix, tol)
        if not red.analytic:
            raise InconsistencyError(
                "determinate reduction degenerated; data is inconsistent"
            )
        if abs(abs(red.value) - 1.0) > 1e-8:
            raise InconsistencyError(
                f"determinate parameter is not unimodular: |R0|={abs(red.value)}"
            )
        f = LftComposite(matrix, Constant(red.value / abs(red.value)))
    jet = f.jet_at(data.t0, data.order)
    scale = max(1.0, float(np.max(np.abs(s))))
    err = float(np.max(np.abs(jet.coeffs - s)))
    if err > 1e-8 * scale:
        raise InconsistencyError(
            f"synthesized unique solution missed the data: error {err:.3e}"
        )
    return f


@dataclass(frozen=True)
class SolveResult:
    classification: Classification
    functions: tuple[AnalyticFunction, ...]
    reason: Optional[str]


def _ramp(k: int) -> list[float]:
    """k deterministic values 0, 1/4, 1/2, ... (capped at 1/2 overall)."""
    if k <= 1:
        return [0.0]
    return [i / (2.0 * (k - 1)) for i in range(k)]


def _constant_menu(excluded: complex, k: int) -> list[complex]:
    """k Schur constants bounded by 1, clear of the excluded value."""
    out: list[complex] = []
    candidates = [0.0, -excluded]
    mag = 0.5
    while len(candidates) < 8 * (k + 2):
        for phase in (1.0, 1.0j, -1.0, -1.0j):
            candidates.append(mag * phase)
        mag /= 2.0
    for c in candidates:
        c = complex(c)
        if abs(c) > 1.0 or abs(c - excluded) <= 1e-6:
            continue
        if any(abs(c - prev) <= 1e-12 for prev in out):
            continue
        out.append(c)
        if len(out) == k:
            return out
    raise ConstructionError("could not assemble the constant parameter menu")


def _jet_family(t0: complex, target, k: int) -> list[AnalyticFunction]:
    """k Schur polynomials matching the target jet, distinct past its order.

    One fitted polynomial plus ramped perturbations of its first free
    coefficient, each budgeted against the fit's sup headroom so every
    variant stays under the Schur bound.  Perturbing the fitted function is
    much cheaper than refitting with a pinned extra coefficient, which can
    raise the achievable minimax floor drastically.
    """
    target = np.atleast_1d(np.asarray(target, dtype=complex))
    K = target.size - 1
    try:
        base = fit_schur_polynomial(t0, target, bound=FIT_BOUND - 1.0 / 64.0)
    except ConstructionError:
        base = fit_schur_polynomial(t0, target)
    if k == 1:
        return [base]
    coeffs = np.asarray(base.jet_at(t0, max(base.degree if isinstance(base, Polynomial)
                                            else 0, K + 1)).coeffs)
    sup = disk_sup_norm(base, grid=max(2048, 16 * coeffs.size))
    headroom = (FIT_BOUND - sup) / 2.0
    out: list[AnalyticFunction] = [base]
    for lam in _ramp(k)[1:]:
        bumped = coeffs.copy()
        bumped[K + 1] += 2.0 * lam * headroom / 2.0 ** (K + 1)
        out.append(Polynomial(t0, bumped))
    return out


def _infinite_family(data: BoundaryJet, cls: Classification, k: int,
                     tol: float) -> list[AnalyticFunction]:
    t0 = data.t0
    s = data.coeffs
    N = data.order

    if cls.case_tag == "interior":
        return _jet_family(t0, s, k)
    if cls.case_tag == "trivial_order0":
        # any Schur function with boundary value s0; ramped rotations of it
        return [Polynomial(0.0, [s[0] * c, s[0] * (1.0 - c) * np.conj(t0)])
                if c < 1.0 else Constant(s[0]) for c in _ramp(k)]

    n = cls.n
    matrix = build_lft(data.truncated(2 * n - 1), n, tol)

    if N == 2 * n - 1:
        _, _, _, d0 = matrix.entry_values(t0)
        consts = _constant_menu(np.conj(d0), k)
        return [LftComposite(matrix, Constant(c)) for c in consts]

    red = reduce_problem(data, n, matrix, tol)
    if not red.analytic:
        raise InconsistencyError(
            "classification promised solvability but the reduction degenerated"
        )
    if N == 2 * n:
        value = red.value
        if abs(value) < 1.0 - 1e-8:
            # parameters pinned to the reduced value, sloped into the disk
            params = [
                Polynomial(0.0, [value - lam * (1.0 - abs(value)) / 2.0,
                                 lam * (1.0 - abs(value)) * np.conj(t0) / 2.0])
                if lam > 0.0 else Constant(value)
                for lam in _ramp(k)
            ]
        else:
            snapped = value / abs(value)
            params = [
                Polynomial(0.0, [snapped * c, snapped * (1.0 - c) * np.conj(t0)])
                for c in _ramp(k)
            ]
        return [LftComposite(matrix, p) for p in params]

    # N > 2n with positive skew: the parameter inherits the reduced jet.
    params = _jet_family(t0, red.target, k)
    return [LftComposite(matrix, p) for p in params]


_PROBES = np.array([0.0, 0.37 - 0.21j, -0.55 + 0.33j, 0.11 + 0.62j])


def _check_outputs(data: BoundaryJet, funcs: Sequence[AnalyticFunction]) -> None:
    values = []
    for f in funcs:
        report = verify_asymptotics(f, data)
        if not report.passed:
            raise InconsistencyError(
                f"emitted solution failed verification: {report.details}"
            )
        if disk_sup_norm(f, 256) > 1.0 + SUP_SLACK:
            raise InconsistencyError("emitted solution left the Schur class")
        values.append(np.asarray(f(_PROBES)))
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if float(np.max(np.abs(values[i] - values[j]))) <= 1e-10:
                raise InconsistencyError("emitted solutions are not distinct")


def solve(data: BoundaryJet, samples: int = 3,
          tol: float = DEFAULT_TOL) -> SolveResult:
    """Classify and construct.

    No solution: empty tuple plus the reason.  Unique: exactly one
    function.  Infinitely many: ``samples`` distinct functions from the
    documented parameter menus.  Every emitted function is re-verified
    against the data and the Schur bound before being returned.
    """
    cls = classify(data, tol)
    if cls.verdict is Verdict.NO_SOLUTION:
        return SolveResult(cls, (), cls.reason)
    if cls.verdict is Verdict.UNIQUE:
        funcs: list[AnalyticFunction] = [unique_solution(data, cls, tol)]
    else:
        funcs = _infinite_family(data, cls, max(1, samples), tol)
    _check_outputs(data, funcs)
    return SolveResult(cls, tuple(funcs), None)
