"""JSON schemas for problems and functions.

Problem documents carry the base point (cartesian or angle form), the jet
coefficients, and optional tolerance/sample overrides.  Function documents
carry one of four kinds: constant, polynomial, blaschke, lft; the lft kind
stores only the state that determines the coefficient matrix (base point,
jet column, Pick matrix) plus the parameter document, so a round trip
rebuilds the identical object.  Serialization is deterministic: sorted
keys, fixed indentation, floats via repr round-tripping.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import InputError
from .functions import (
    AnalyticFunction,
    BlaschkeProduct,
    Constant,
    LftComposite,
    Polynomial,
)
from .lft import CoefficientMatrix
from .structured import BoundaryJet


def _cnum(value: complex) -> dict:
    value = complex(value)
    return {"im": value.imag, "re": value.real}


def _as_complex(node: Any, path: str) -> complex:
    if not isinstance(node, dict):
        raise InputError(f"{path}: expected an object with re/im")
    try:
        re = float(node["re"])
        im = float(node["im"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: expected numeric re/im fields") from exc
    return complex(re, im)


def problem_to_dict(data: BoundaryJet, tol: float | None = None,
                    samples: int | None = None) -> dict:
    doc: dict = {
        "s": [_cnum(c) for c in data.coeffs],
        "t0": _cnum(data.t0),
    }
    if tol is not None:
        doc["tol"] = float(tol)
    if samples is not None:
        doc["samples"] = int(samples)
    return doc


def problem_from_dict(doc: Any) -> tuple[BoundaryJet, float | None, int | None]:
    if not isinstance(doc, dict):
        raise InputError("problem document must be a JSON object")
    if "t0" not in doc:
        raise InputError("t0: field is required")
    t0_node = doc["t0"]
    if isinstance(t0_node, dict) and "angle" in t0_node:
        try:
            angle = float(t0_node["angle"])
        except (TypeError, ValueError) as exc:
            raise InputError("t0.angle: expected a number") from exc
        t0 = np.exp(1j * angle)
    else:
        t0 = _as_complex(t0_node, "t0")
    s_node = doc.get("s")
    if not isinstance(s_node, list) or not s_node:
        raise InputError("s: expected a nonempty list of {re, im}")
    coeffs = [_as_complex(c, f"s[{i}]") for i, c in enumerate(s_node)]
    if abs(abs(complex(t0)) - 1.0) > 1e-9:
        raise InputError(f"t0: not unimodular, |t0|={abs(complex(t0))}")
    tol = None
    if "tol" in doc:
        try:
            tol = float(doc["tol"])
        except (TypeError, ValueError) as exc:
            raise InputError("tol: expected a number") from exc
        if not 0.0 < tol < 1.0:
            raise InputError("tol: must lie in (0, 1)")
    samples = None
    if "samples" in doc:
        if not isinstance(doc["samples"], int) or doc["samples"] < 1:
            raise InputError("samples: expected a positive integer")
        samples = doc["samples"]
    return BoundaryJet(t0, coeffs), tol, samples


def function_to_dict(f: AnalyticFunction) -> dict:
    if isinstance(f, Constant):
        return {"kind": "constant", "value": _cnum(f.value)}
    if isinstance(f, Polynomial):
        return {
            "center": _cnum(f.center),
            "coeffs": [_cnum(c) for c in f.coeffs],
            "kind": "polynomial",
        }
    if isinstance(f, BlaschkeProduct):
        return {
            "gamma": _cnum(f.gamma),
            "kind": "blaschke",
            "zeros": [_cnum(c) for c in f.zeros],
        }
    if isinstance(f, LftComposite):
        m = f.matrix
        return {
            "column": [_cnum(c) for c in m.column],
            "kind": "lft",
            "param": function_to_dict(f.param),
            "pick": [[_cnum(v) for v in row] for row in m.pick],
            "t0": _cnum(m.t0),
        }
    raise InputError(f"function {f!r} has no serialized form")


def function_from_dict(doc: Any, path: str = "function") -> AnalyticFunction:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InputError(f"{path}: expected an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "constant":
        return Constant(_as_complex(doc.get("value"), f"{path}.value"))
    if kind == "polynomial":
        coeffs = doc.get("coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise InputError(f"{path}.coeffs: expected a nonempty list")
        return Polynomial(
            _as_complex(doc.get("center"), f"{path}.center"),
            [_as_complex(c, f"{path}.coeffs[{i}]") for i, c in enumerate(coeffs)],
        )
    if kind == "blaschke":
        zeros = doc.get("zeros", [])
        if not isinstance(zeros, list):
            raise InputError(f"{path}.zeros: expected a list")
        return BlaschkeProduct(
            _as_complex(doc.get("gamma"), f"{path}.gamma"),
            [_as_complex(c, f"{path}.zeros[{i}]") for i, c in enumerate(zeros)],
        )
    if kind == "lft":
        column_node = doc.get("column")
        pick_node = doc.get("pick")
        if not isinstance(column_node, list) or not column_node:
            raise InputError(f"{path}.column: expected a nonempty list")
        if not isinstance(pick_node, list) or len(pick_node) != len(column_node):
            raise InputError(f"{path}.pick: expected a square matrix matching the column")
        column = [_as_complex(c, f"{path}.column[{i}]")
                  for i, c in enumerate(column_node)]
        pick = []
        for i, row in enumerate(pick_node):
            if not isinstance(row, list) or len(row) != len(column_node):
                raise InputError(f"{path}.pick[{i}]: expected a row of matching length")
            pick.append([_as_complex(v, f"{path}.pick[{i}][{j}]")
                         for j, v in enumerate(row)])
        matrix = CoefficientMatrix.from_state(
            _as_complex(doc.get("t0"), f"{path}.t0"), column, pick
        )
        return LftComposite(matrix, function_from_dict(doc.get("param"), f"{path}.param"))
    raise InputError(f"{path}.kind: unknown kind {kind!r}")


def dumps(doc: Any) -> str:
    """Deterministic JSON text (sorted keys, two-space indent, newline)."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
