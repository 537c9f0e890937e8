"""Truncated complex Taylor series (jets) with strict-order arithmetic.

A jet stores the coefficients of an expansion about a fixed center and
supports ring arithmetic that never reads or writes past its order.  Every
higher module uses jets as its exact-derivative substrate, so the rules here
are deliberately rigid: operands must share both center and order.
"""

from __future__ import annotations

import numpy as np

from .errors import NonUnitDivisorError, UsageError

# Relative floor below which a divisor's constant term counts as zero.
_UNIT_FLOOR = 1e-13


class Jet:
    """Taylor coefficients ``c[j]`` of ``(z - center)**j`` for ``j <= order``."""

    __slots__ = ("center", "coeffs")

    def __init__(self, center: complex, coeffs) -> None:
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise UsageError("jet coefficients must form a nonempty 1-d sequence")
        arr.setflags(write=False)
        self.center = complex(center)
        self.coeffs = arr

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value: complex, center: complex, order: int) -> "Jet":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(center, c)

    @classmethod
    def variable(cls, center: complex, order: int) -> "Jet":
        """The jet of the identity map ``z`` about ``center``."""
        c = np.zeros(order + 1, dtype=complex)
        c[0] = center
        if order >= 1:
            c[1] = 1.0
        return cls(center, c)

    def _match(self, other: "Jet") -> None:
        if self.center != other.center:
            raise UsageError(
                f"jet centers differ: {self.center} vs {other.center}"
            )
        if self.order != other.order:
            raise UsageError(
                f"jet orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, Jet):
            self._match(other)
            return Jet(self.center, self.coeffs + other.coeffs)
        return self + Jet.constant(other, self.center, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.center, -self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._match(other)
            full = np.convolve(self.coeffs, other.coeffs)
            return Jet(self.center, full[: self.order + 1])
        return Jet(self.center, self.coeffs * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            self._match(other)
            return _divide(self, other)
        return Jet(self.center, self.coeffs / complex(other))

    def __rtruediv__(self, other):
        return Jet.constant(other, self.center, self.order) / self

    def __call__(self, z):
        """Evaluate the truncation as a polynomial in ``z - center``."""
        u = np.asarray(z, dtype=complex) - self.center
        acc = np.zeros_like(u)
        for c in self.coeffs[::-1]:
            acc = acc * u + c
        return acc if acc.shape else complex(acc)

    def __repr__(self) -> str:
        return f"Jet(center={self.center!r}, coeffs={list(self.coeffs)!r})"


def _divide(a: Jet, b: Jet) -> Jet:
    scale = np.max(np.abs(b.coeffs))
    if scale == 0.0 or abs(b.coeffs[0]) <= _UNIT_FLOOR * scale:
        raise NonUnitDivisorError(
            "jet division by a series with (numerically) vanishing constant term"
        )
    n = a.order + 1
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        acc = a.coeffs[k]
        if k:
            acc = acc - np.dot(b.coeffs[1 : k + 1], out[k - 1 :: -1])
        out[k] = acc / b.coeffs[0]
    return Jet(a.center, out)
