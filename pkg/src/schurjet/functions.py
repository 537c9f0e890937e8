"""Evaluable analytic-function representations.

Four value-level variants cover everything the solver emits: constants,
polynomials in powers of ``z - center``, finite Blaschke products, and
linear-fractional images of a parameter under a 2x2 coefficient matrix.
Each variant supports pointwise evaluation on scalars or arrays and exact
jet extraction at any point of analyticity.
"""

from __future__ import annotations

import numpy as np

from .errors import PoleError, UsageError
from .jets import Jet

_GAMMA_TOL = 1e-12
_ZERO_MARGIN = 1e-12


class AnalyticFunction:
    """Common interface: ``f(z)`` for values, ``f.jet_at(center, order)`` for jets."""

    def __call__(self, z):
        raise NotImplementedError

    def jet_at(self, center: complex, order: int) -> Jet:
        raise NotImplementedError


class Constant(AnalyticFunction):
    def __init__(self, value: complex) -> None:
        self.value = complex(value)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.value, dtype=complex)
        return out if out.shape else self.value

    def jet_at(self, center, order):
        return Jet.constant(self.value, center, order)

    def __repr__(self):
        return f"Constant({self.value!r})"


class Polynomial(AnalyticFunction):
    """``sum(coeffs[j] * (z - center)**j)``."""

    def __init__(self, center: complex, coeffs) -> None:
        self.center = complex(center)
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise UsageError("polynomial needs a nonempty coefficient sequence")
        arr.setflags(write=False)
        self.coeffs = arr

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        u = np.asarray(z, dtype=complex) - self.center
        acc = np.zeros_like(u)
        for c in self.coeffs[::-1]:
            acc = acc * u + c
        return acc if acc.shape else complex(acc)

    def jet_at(self, center, order):
        # Horner in the jet ring recenters exactly.
        u = Jet.variable(center, order) - self.center
        acc = Jet.constant(0.0, center, order)
        for c in self.coeffs[::-1]:
            acc = acc * u + c
        return acc

    def __repr__(self):
        return f"Polynomial(center={self.center!r}, degree={self.degree})"


class BlaschkeProduct(AnalyticFunction):
    """``gamma * prod((z - a)/(1 - conj(a) z))`` with ``|gamma| = 1``, ``|a| < 1``."""

    def __init__(self, gamma: complex, zeros=()) -> None:
        gamma = complex(gamma)
        if abs(abs(gamma) - 1.0) > _GAMMA_TOL:
            raise UsageError(f"gamma must be unimodular, got |gamma|={abs(gamma)}")
        zs = np.atleast_1d(np.asarray(zeros, dtype=complex)) if len(zeros) else \
            np.zeros(0, dtype=complex)
        if zs.size and np.max(np.abs(zs)) >= 1.0 - _ZERO_MARGIN:
            raise UsageError("every Blaschke zero must satisfy |a| < 1")
        zs = zs.copy()
        zs.setflags(write=False)
        self.gamma = gamma
        self.zeros = zs

    @property
    def degree(self) -> int:
        return self.zeros.size

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        acc = np.full(z.shape, self.gamma, dtype=complex)
        for a in self.zeros:
            den = 1.0 - np.conj(a) * z
            if np.any(den == 0.0):
                raise PoleError(f"evaluation at the pole 1/conj({a})")
            acc = acc * (z - a) / den
        return acc if acc.shape else complex(acc)

    def jet_at(self, center, order):
        acc = Jet.constant(self.gamma, center, order)
        var = Jet.variable(center, order)
        for a in self.zeros:
            acc = acc * (var - a) / (1.0 - np.conj(a) * var)
        return acc

    def __repr__(self):
        return f"BlaschkeProduct(gamma={self.gamma!r}, zeros={list(self.zeros)!r})"


class LftComposite(AnalyticFunction):
    """``a + b c E / (1 - d E)`` for a coefficient matrix and parameter ``E``."""

    def __init__(self, matrix, param: AnalyticFunction) -> None:
        self.matrix = matrix
        self.param = param

    def __call__(self, z):
        a, b, c, d = self.matrix.entry_values(z)
        e = self.param(z)
        den = 1.0 - d * np.asarray(e, dtype=complex)
        if np.any(den == 0.0):
            raise PoleError("linear-fractional denominator vanished at an input")
        out = a + b * c * e / den
        return out if np.asarray(out).shape else complex(out)

    def jet_at(self, center, order):
        ja, jb, jc, jd = self.matrix.entry_jets(center, order)
        je = self.param.jet_at(center, order)
        return ja + (jb * jc * je) / (1.0 - jd * je)

    def __repr__(self):
        return f"LftComposite(n={self.matrix.n}, param={self.param!r})"


class LftPreimage(AnalyticFunction):
    """The parameter recovered from a function: ``(f-a) / (bc + d(f-a))``."""

    def __init__(self, matrix, target: AnalyticFunction) -> None:
        self.matrix = matrix
        self.target = target

    def __call__(self, z):
        a, b, c, d = self.matrix.entry_values(z)
        diff = np.asarray(self.target(z), dtype=complex) - a
        den = b * c + d * diff
        if np.any(den == 0.0):
            raise PoleError("inverse transform denominator vanished at an input")
        out = diff / den
        return out if np.asarray(out).shape else complex(out)

    def jet_at(self, center, order):
        ja, jb, jc, jd = self.matrix.entry_jets(center, order)
        diff = self.target.jet_at(center, order) - ja
        return diff / (jb * jc + jd * diff)

    def __repr__(self):
        return f"LftPreimage(n={self.matrix.n}, target={self.target!r})"
