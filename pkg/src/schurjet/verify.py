"""Independent numerical verification.

Nothing here reuses the classifier's algebra: asymptotics are probed on
radial (optionally Stolz-angle) paths, curvature data comes from bivariate
kernel expansions built out of two independent jets, and membership in the
Schur class is spot-checked by circle grids.  Finite differences are never
used; near the boundary they are hopelessly ill-conditioned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import PoleError, SchurJetError, UsageError
from .functions import AnalyticFunction, BlaschkeProduct
from .structured import BoundaryJet

#: threshold on the final remainder ratio, relative to 1 + data scale
RATIO_TOL = 1e-6
#: required fitted decay exponent when the ratio stays above threshold
DECAY_MIN = 0.5
#: tolerance for the direct jet comparison when the function expands at t0
JET_TOL = 1e-8
#: Stolz-angle ray angles (radians off the radius) used with angles=True
RAY_ANGLES = (-np.pi / 3, -np.pi / 6, np.pi / 6, np.pi / 3)


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    remainder_ratios: tuple[tuple[float, float], ...]
    decay_exponent: Optional[float]
    sup_norm: Optional[float]
    jet_error: Optional[float]
    details: str


def _ratio_sweep(f, data: BoundaryJet, depth: int, angle: float) -> list[tuple[float, float]]:
    N = data.order
    t0 = data.t0
    rot = np.exp(1j * angle)
    out = []
    for k in range(4, depth + 1):
        delta = 2.0 ** (-k)
        z = t0 * (1.0 - delta * rot)
        u = z - t0
        taylor = 0.0 + 0.0j
        for c in data.coeffs[::-1]:
            taylor = taylor * u + c
        out.append((abs(u), abs(complex(f(z)) - taylor) / abs(u) ** N))
    return out


def _fit_decay(ratios) -> Optional[float]:
    pts = [(d, r) for d, r in ratios[-8:] if r > 0.0]
    if len(pts) < 2:
        return None
    logs = np.log(np.asarray(pts))
    slope = np.polyfit(logs[:, 0], logs[:, 1], 1)[0]
    return float(slope)


def verify_asymptotics(f: AnalyticFunction, data: BoundaryJet, depth: int = 12,
                       angles: bool = False) -> VerificationReport:
    """Check that ``f`` realizes the prescribed asymptotic expansion.

    Radial remainder ratios ``|f - truncation| / |z - t0|^N`` are sampled at
    ``z = t0 (1 - 2^-k)``; the sweep passes when the last ratio falls under
    ``RATIO_TOL * (1 + scale)`` or the fitted decay exponent (last eight
    samples) reaches ``DECAY_MIN``.  When ``f`` expands at the base point,
    the exact jet comparison decides instead and the ratios remain purely
    diagnostic; deep radial samples of an exact solution sit on the
    floating-point noise floor, not on the mathematical decay curve.
    """
    N = data.order
    scale = max(1.0, float(np.max(np.abs(data.coeffs))))
    ratios = _ratio_sweep(f, data, depth, 0.0)
    sweeps = [ratios]
    if angles:
        sweeps += [_ratio_sweep(f, data, depth, ang) for ang in RAY_ANGLES]

    ratio_ok = all(s[-1][1] <= RATIO_TOL * (1.0 + scale) for s in sweeps)
    exponents = [_fit_decay(s) for s in sweeps]
    decay_ok = all(e is not None and e >= DECAY_MIN for e in exponents)

    jet_error = None
    try:
        jet = f.jet_at(data.t0, N)
        jet_error = float(np.max(np.abs(jet.coeffs - data.coeffs)))
    except SchurJetError:
        pass

    if jet_error is not None:
        passed = jet_error <= JET_TOL * scale
        details = f"jet comparison decided: error {jet_error:.3e}"
    else:
        passed = ratio_ok or decay_ok
        details = (f"radial sweep decided: final ratio {ratios[-1][1]:.3e}, "
                   f"decay exponent {exponents[0]}")
    return VerificationReport(
        passed=passed,
        remainder_ratios=tuple(ratios),
        decay_exponent=exponents[0],
        sup_norm=None,
        jet_error=jet_error,
        details=details,
    )


def _sp_from_jet(a, z, n, one):
    """Shared curvature-matrix kernel: works on numpy scalars or mpmath ones.

    ``a`` is the length-n jet of f at z, ``one`` the multiplicative unit of
    the arithmetic in use.  Returns a nested list.
    """
    zc = z.conjugate()
    num = [[(one if i == j == 0 else 0 * one) - a[i] * a[j].conjugate()
            for j in range(n)] for i in range(n)]
    den00 = one - z * zc
    inv = [[0 * one for _ in range(n)] for _ in range(n)]
    inv[0][0] = one / den00
    for i in range(n):
        for j in range(n):
            if i == 0 and j == 0:
                continue
            acc = 0 * one
            if i >= 1:
                acc -= zc * inv[i - 1][j]
            if j >= 1:
                acc -= z * inv[i][j - 1]
            if i >= 1 and j >= 1:
                acc -= inv[i - 1][j - 1]
            inv[i][j] = -acc / den00
    out = [[0 * one for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = 0 * one
            for k in range(i + 1):
                for l in range(j + 1):
                    acc += num[k][l] * inv[i - k][j - l]
            out[i][j] = acc
    return out


def _mp_jet(f, z, order, mp):
    """Jet of f at z in mpmath arithmetic; supports the value-level kinds."""
    from .functions import Constant, Polynomial

    one = mp.mpc(1)
    if isinstance(f, Constant):
        return [mp.mpc(f.value)] + [0 * one] * order
    if isinstance(f, Polynomial):
        u0 = mp.mpc(z) - mp.mpc(f.center)
        out = [0 * one for _ in range(order + 1)]
        # Horner on jets of the shifted variable (u0, 1, 0, ...)
        for c in f.coeffs[::-1]:
            nxt = [0 * one for _ in range(order + 1)]
            for i in range(order + 1):
                nxt[i] = out[i] * u0 + (out[i - 1] if i else 0 * one)
            nxt[0] += mp.mpc(c)
            out = nxt
        return out
    if isinstance(f, BlaschkeProduct):
        acc = [mp.mpc(f.gamma)] + [0 * one] * order
        for a in f.zeros:
            am = mp.mpc(a)
            numj = [mp.mpc(z) - am] + ([one] if order else []) + [0 * one] * max(order - 1, 0)
            denj = [one - am.conjugate() * mp.mpc(z)] + \
                ([-am.conjugate()] if order else []) + [0 * one] * max(order - 1, 0)
            prod = [0 * one for _ in range(order + 1)]
            for i in range(order + 1):
                prod[i] = sum(acc[k] * numj[i - k] for k in range(i + 1))
            quot = [0 * one for _ in range(order + 1)]
            for i in range(order + 1):
                acc_i = prod[i] - sum(denj[k] * quot[i - k] for k in range(1, i + 1))
                quot[i] = acc_i / denj[0]
            acc = quot
        return acc
    raise UsageError(
        f"high-precision path does not support {type(f).__name__} representations"
    )


def schwarz_pick_matrix(f: AnalyticFunction, z: complex, n: int,
                        dps: int | None = None) -> np.ndarray:
    """Interior curvature matrix of mixed Taylor coefficients at |z| < 1.

    Entry (i, j) is the coefficient of ``u^i conj(v)^j`` in the expansion of
    ``(1 - f(z+u) conj(f(z+v))) / (1 - (z+u) conj(z+v))``; for a Schur-class
    function the matrix is positive semidefinite, with rank capped by the
    degree for finite Blaschke products.

    Extracting O(1) coefficients from this kernel involves intermediates of
    size ``(1-|z|^2)^-(i+j+1)``, so double precision degrades rapidly as z
    nears the circle; pass ``dps`` to run the identical algorithm in
    mpmath arithmetic (constant/polynomial/Blaschke representations only).
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise UsageError("interior curvature matrix needs |z| < 1")
    if n < 1:
        raise UsageError("matrix size must be at least 1")
    if dps is None:
        a = f.jet_at(z, n - 1).coeffs
        rows = _sp_from_jet(list(a), z + 0.0j, n, 1.0 + 0.0j)
        return np.array(rows, dtype=complex)
    import mpmath as mp
    with mp.workdps(dps):
        a = _mp_jet(f, z, n - 1, mp)
        rows = _sp_from_jet(a, mp.mpc(z), n, mp.mpc(1))
        return np.array([[complex(v) for v in row] for row in rows])


def _supports_mp(f) -> bool:
    from .functions import Constant, Polynomial

    return isinstance(f, (Constant, Polynomial, BlaschkeProduct))


def boundary_schwarz_pick(f: AnalyticFunction, t0: complex, n: int,
                          depth: int = 24,
                          dps: int | None = None) -> tuple[np.ndarray, bool]:
    """Radial limit of the interior curvature matrix at a circle point.

    Returns the deepest sample and a convergence flag (Cauchy criterion at
    1e-6 relative); a False flag is a finding, not an error - it means the
    function misses the required boundary regularity.  The sweep runs in
    high precision whenever the representation allows it (see
    `schwarz_pick_matrix`); double precision cannot follow the radius deep
    enough for matrices larger than 1x1.
    """
    t0 = complex(t0)
    if dps is None and _supports_mp(f):
        dps = 60
    prev = None
    last = None
    converged = False
    for k in range(4, depth + 1):
        z = t0 * (1.0 - 2.0 ** (-k))
        cur = schwarz_pick_matrix(f, z, n, dps=dps)
        if prev is not None:
            scale = max(1.0, float(np.max(np.abs(cur))))
            converged = float(np.max(np.abs(cur - prev))) <= 1e-6 * scale
        prev, last = cur, cur
    return last, converged


def disk_sup_norm(f: AnalyticFunction, grid: int = 256) -> float:
    """Max modulus over a uniform circle grid (maximum principle transfers).

    The grid maximum is a surrogate for the true sup; callers compare it
    against thresholds with their own slack.
    """
    z = np.exp(2j * np.pi * np.arange(grid) / grid)
    vals = np.asarray(f(z), dtype=complex)
    if not np.all(np.isfinite(vals)):
        raise PoleError("function has a pole on the evaluation circle")
    return float(np.max(np.abs(vals)))


def random_blaschke_problem(degree: int, t0: complex, order: int,
                            seed: int) -> tuple[BoundaryJet, BlaschkeProduct]:
    """Deterministic-by-seed generator of realizable problems.

    Zeros are sampled uniformly in the disk of radius 0.8, the unimodular
    factor uniformly on the circle; the returned data is the exact boundary
    jet of the generator, so every classification of it must be solvable.
    """
    if degree < 0:
        raise UsageError("degree must be nonnegative")
    rng = np.random.default_rng(seed)
    radii = 0.8 * np.sqrt(rng.uniform(0.0, 1.0, degree))
    angles = rng.uniform(0.0, 2.0 * np.pi, degree)
    zeros = radii * np.exp(1j * angles)
    gamma = np.exp(2j * np.pi * rng.uniform())
    f = BlaschkeProduct(gamma, zeros)
    data = BoundaryJet(t0, f.jet_at(complex(t0), order).coeffs)
    return data, f
