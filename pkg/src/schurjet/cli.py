"""Command-line interface.

Subcommands: ``classify``, ``solve``, ``verify``, ``selftest``.  Exit codes:
0 solvable/verified, 2 no solution, 3 verification or selftest failure,
1 usage or input error.  All output is plain text or deterministic JSON
(no color, byte-identical across runs for identical inputs).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import serialize
from .classify import Classification, Verdict, classify
from .errors import SchurJetError
from .structured import BoundaryJet
from .synthesize import solve
from .verify import disk_sup_norm, verify_asymptotics

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_SOLUTION = 2
EXIT_FAILED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchurJetError(f"argument error: {message}")


def _classification_dict(cls: Classification) -> dict:
    orders = []
    for k, rep in enumerate(cls.reports, start=1):
        orders.append({
            "eigenvalues": [float(e) for e in rep.eigs] if rep.eigs is not None else None,
            "herm_residual": rep.herm_residual,
            "hermitian": rep.hermitian,
            "min_eig": rep.min_eig,
            "order": k,
            "psd": rep.psd,
            "rank": rep.rank,
        })
    return {
        "case_tag": cls.case_tag,
        "fragile": cls.fragile,
        "n": cls.n,
        "orders": orders,
        "rank": cls.rank,
        "reason": cls.reason,
        "s0_modulus": cls.s0_abs,
        "skew": cls.skew,
        "skew_imag": cls.skew_imag,
        "tol": cls.tol,
        "verdict": cls.verdict.value,
    }


def _print_classification(cls: Classification) -> None:
    print(f"verdict:  {cls.verdict.value}")
    print(f"case:     {cls.case_tag} ({cls.reason})")
    print(f"order n:  {cls.n}")
    if cls.rank is not None:
        print(f"rank:     {cls.rank}")
    if cls.skew is not None:
        print(f"skew:     {cls.skew:.12g} (imag residual {cls.skew_imag:.3e})")
    print(f"|s0|:     {cls.s0_abs:.12g}")
    for k, rep in enumerate(cls.reports, start=1):
        eigs = ", ".join(f"{e:.6g}" for e in rep.eigs) if rep.eigs is not None else "-"
        print(f"order {k}: hermitian={rep.hermitian} psd={rep.psd} "
              f"rank={rep.rank} eigenvalues=[{eigs}]")
    if cls.fragile:
        print("warning:  a decision quantity sits near its tolerance (fragile)")


def _load_problem(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return serialize.problem_from_dict(serialize.loads(text))


def _solution_samples(f, t0: complex) -> dict:
    circle = np.exp(2j * np.pi * np.arange(64) / 64)
    radial = t0 * (1.0 - 2.0 ** (-(1.0 + 19.0 * np.arange(64) / 63.0)))
    return {
        "circle": [{"value": serialize._cnum(complex(f(z))), "z": serialize._cnum(z)}
                   for z in circle],
        "radial": [{"value": serialize._cnum(complex(f(z))), "z": serialize._cnum(z)}
                   for z in radial],
    }


def _cmd_classify(args) -> int:
    data, tol, _ = _load_problem(args.input)
    cls = classify(data, args.tol if args.tol is not None else (tol or 1e-9))
    if args.json:
        sys.stdout.write(serialize.dumps(_classification_dict(cls)))
    else:
        _print_classification(cls)
    return EXIT_OK if cls.solvable else EXIT_NO_SOLUTION


def _cmd_solve(args) -> int:
    data, tol, samples = _load_problem(args.input)
    k = args.samples if args.samples is not None else (samples or 3)
    result = solve(data, samples=k, tol=args.tol if args.tol is not None else (tol or 1e-9))
    docs = []
    for f in result.functions:
        docs.append({
            "function": serialize.function_to_dict(f),
            "samples": _solution_samples(f, data.t0),
        })
    payload = {
        "classification": _classification_dict(result.classification),
        "reason": result.reason,
        "solutions": docs,
    }
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "classification.json").write_text(
            serialize.dumps(payload["classification"]), encoding="utf-8")
        for i, doc in enumerate(docs):
            (out / f"solution_{i:03d}.json").write_text(
                serialize.dumps(doc), encoding="utf-8")
        print(f"wrote {len(docs)} solution file(s) to {out}")
        if result.reason:
            print(f"no solution: {result.reason}")
    else:
        sys.stdout.write(serialize.dumps(payload))
    return EXIT_OK if result.functions else EXIT_NO_SOLUTION


def _cmd_verify(args) -> int:
    data, _, _ = _load_problem(args.input)
    text = Path(args.function).read_text(encoding="utf-8")
    doc = serialize.loads(text)
    if isinstance(doc, dict) and "function" in doc:
        doc = doc["function"]  # accept solution files written by `solve --out`
    f = serialize.function_from_dict(doc)
    report = verify_asymptotics(f, data, depth=args.depth, angles=args.angles)
    sup = disk_sup_norm(f, 256)
    ok = report.passed and sup <= 1.0 + 1e-8
    doc = {
        "decay_exponent": report.decay_exponent,
        "details": report.details,
        "jet_error": report.jet_error,
        "passed": bool(ok),
        "ratios": [[d, r] for d, r in report.remainder_ratios],
        "sup_norm": sup,
    }
    sys.stdout.write(serialize.dumps(doc))
    return EXIT_OK if ok else EXIT_FAILED


def _selftest_cases():
    from .functions import Polynomial

    yield ("unique jet recovery", lambda: _expect_unique())
    yield ("indeterminate families", lambda: _expect_infinite())
    yield ("no-solution gates", lambda: _expect_none())
    yield ("verifier rejects a mismatch", lambda: _expect_verify_failure(Polynomial))


def _expect_unique():
    data = BoundaryJet(1.0, [1.0, 1.0, 0.0, 0.0])
    result = solve(data)
    assert result.classification.verdict is Verdict.UNIQUE
    assert len(result.functions) == 1
    z = np.exp(2j * np.pi * np.arange(32) / 32) * 0.9
    assert np.max(np.abs(result.functions[0](z) - z)) < 1e-9


def _expect_infinite():
    for coeffs in ([1.0, 3.0, 9.0], [1.0, 3.0, 3.0]):
        result = solve(BoundaryJet(1.0, coeffs), samples=3)
        assert result.classification.verdict is Verdict.INFINITE
        assert len(result.functions) == 3


def _expect_none():
    for coeffs in ([1.0, 3.0, 3.0, 5.0], [1.0, 3.0, -3.0], [1.0, -0.5]):
        result = solve(BoundaryJet(1.0, coeffs))
        assert result.classification.verdict is Verdict.NO_SOLUTION
        assert result.functions == ()


def _expect_verify_failure(Polynomial):
    data = BoundaryJet(1.0, [1.0, 1.0, 1.0])
    f = Polynomial(0.0, [0.0, 1.0])
    assert not verify_asymptotics(f, data).passed


def _cmd_selftest(_args) -> int:
    failures = 0
    for name, fn in _selftest_cases():
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - report and continue
            failures += 1
            print(f"FAIL {name}: {exc}")
        else:
            print(f"PASS {name}")
    return EXIT_OK if failures == 0 else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schurjet",
                     description="Boundary jet interpolation in the Schur class")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a problem file")
    p.add_argument("--input", required=True, help="problem JSON path")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("solve", help="classify and construct solutions")
    p.add_argument("--input", required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", default=None, help="directory for solution files")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="verify a function file against a problem")
    p.add_argument("--input", required=True)
    p.add_argument("--function", required=True)
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--angles", action="store_true",
                   help="sweep Stolz-angle rays in addition to the radius")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selftest", help="run the built-in smoke suite")
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SchurJetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
