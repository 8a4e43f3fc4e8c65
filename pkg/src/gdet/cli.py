"""Command-line front end.

    gdet det FILE                      generalized determinant
    gdet sign FILE                     sign in {-1, 0, 1}
    gdet solve AFILE BFILE             Cramer's rule for a consistent tall system
    gdet volume FILE                   oriented volume; columns are the generators
    gdet member BASISFILE POINTFILE [--offset OFILE]
    gdet check-mul AFILE BFILE         Gdet(AB) vs Gdet(A) Gdet(B)
    gdet check-cb FILE K               generalized Cauchy-Binet for k = K

Exit codes: 0 ok, 1 usage, 2 parse, 3 dimension/domain, 4 singular or
inconsistent system, 5 oracle capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import apps, core, sign_system
from .errors import (
    CapacityError,
    DimensionError,
    DomainError,
    InconsistentSystemError,
    ParseError,
    RankError,
    SingularSystemError,
)
from .matrix import DEFAULT_TOL, ToleranceConfig, parse_matrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_SYSTEM = 4
EXIT_CAPACITY = 5

TOL_ENV = "GDET_TOL_REL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--csv", action="store_true", help="comma-separated input files")
    common.add_argument("--json", action="store_true", help="emit a JSON object")
    common.add_argument("--rel-tol", type=float, metavar="X")
    common.add_argument("--abs-tol", type=float, metavar="X")
    paths = common.add_mutually_exclusive_group()
    paths.add_argument("--oracle", action="store_true", help="use the enumeration oracle")
    paths.add_argument("--exact", action="store_true", help="exact integer arithmetic")

    parser = _Parser(prog="gdet", description="Generalized determinant of rectangular matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("det", parents=[common]).add_argument("file")
    sub.add_parser("sign", parents=[common]).add_argument("file")
    p = sub.add_parser("solve", parents=[common])
    p.add_argument("afile")
    p.add_argument("bfile")
    sub.add_parser("volume", parents=[common]).add_argument("file")
    p = sub.add_parser("member", parents=[common])
    p.add_argument("basisfile")
    p.add_argument("pointfile")
    p.add_argument("--offset", metavar="OFILE")
    p = sub.add_parser("check-mul", parents=[common])
    p.add_argument("afile")
    p.add_argument("bfile")
    p = sub.add_parser("check-cb", parents=[common])
    p.add_argument("file")
    p.add_argument("k", type=int)
    return parser


def _tolerance(args) -> ToleranceConfig:
    rel = args.rel_tol
    if rel is None and os.environ.get(TOL_ENV):
        try:
            rel = float(os.environ[TOL_ENV])
        except ValueError:
            raise UsageError(f"{TOL_ENV}={os.environ[TOL_ENV]!r} is not a number") from None
    try:
        return ToleranceConfig(
            DEFAULT_TOL.rel_zero if rel is None else rel,
            DEFAULT_TOL.abs_zero if args.abs_tol is None else args.abs_tol,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str, args) -> np.ndarray:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_matrix(text, "csv" if args.csv else "whitespace")
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _load_vector(path: str, args) -> np.ndarray:
    M = _load(path, args)
    if min(M.shape) != 1:
        raise DimensionError(f"{path}: expected a single row or column, got {M.shape[0]}x{M.shape[1]}")
    return M.ravel()


def _det_payload(A, args, tol) -> dict:
    scan = sign_system.scan_rows(A, tol)
    if args.exact:
        s, mag2 = core.gdet_exact_oracle(A)
        magnitude = math.sqrt(mag2)
        payload = {"sign": s, "magnitude": magnitude, "value": s * magnitude,
                   "principal_rows": list(scan.principal), "magnitude_squared": mag2}
    else:
        g = core.gdet_minor_oracle(A, tol) if args.oracle else core.gdet(A, tol)
        payload = {"sign": g.sign, "magnitude": g.magnitude, "value": g.value,
                   "principal_rows": list(g.principal)}
    if scan.ill_conditioned:
        payload["ill_conditioned_sign"] = True
    return payload


def _run(args, out, err) -> int:
    tol = _tolerance(args)
    cmd = args.command

    if cmd in ("det", "volume"):
        payload = _det_payload(_load(args.file, args), args, tol)
        if args.json:
            print(json.dumps(payload), file=out)
        elif cmd == "det":
            print(_fmt(payload["value"]), file=out)
        else:
            print(_fmt(payload["magnitude"]), file=out)
            print(payload["sign"], file=out)
        if payload.get("ill_conditioned_sign"):
            print("warning: sign decided near the zero threshold (ill_conditioned_sign)", file=err)
        return EXIT_OK

    if cmd == "sign":
        A = _load(args.file, args)
        scan = sign_system.scan_rows(A, tol)
        if args.oracle:
            s = sign_system.sign_oracle(A, tol)
        elif args.exact:
            s = core.gdet_exact_oracle(A).sign
        else:
            s = scan.sign
        payload = {"sign": s, "principal_rows": list(scan.principal)}
        if scan.ill_conditioned:
            payload["ill_conditioned_sign"] = True
        print(json.dumps(payload) if args.json else s, file=out)
        return EXIT_OK

    if cmd == "solve":
        A = _load(args.afile, args)
        b = _load_vector(args.bfile, args)
        try:
            sol = apps.cramer_solve(A, b, tol)
        except InconsistentSystemError as exc:
            if args.json:
                print(json.dumps({"error": "inconsistent", "residual": exc.residual}), file=out)
            print(f"error: {exc}", file=err)
            return EXIT_SYSTEM
        except SingularSystemError as exc:
            if args.json:
                print(json.dumps({"error": "singular"}), file=out)
            print(f"error: {exc}", file=err)
            return EXIT_SYSTEM
        if args.json:
            print(json.dumps({"x": sol.x.tolist(), "residual": sol.residual_norm}), file=out)
        else:
            for v in sol.x:
                print(_fmt(v), file=out)
        return EXIT_OK

    if cmd == "member":
        basis = _load(args.basisfile, args)
        point = _load_vector(args.pointfile, args)
        columns = list(basis.T)
        if args.offset:
            member = apps.in_variety(columns, _load_vector(args.offset, args), point, tol)
        else:
            member = apps.in_subspace(columns, point, tol)
        print(json.dumps({"member": member}) if args.json else str(member).lower(), file=out)
        return EXIT_OK

    if cmd == "check-mul":
        res = core.check_multiplication(_load(args.afile, args), _load(args.bfile, args), tol)
    else:
        res = core.check_cauchy_binet(_load(args.file, args), args.k, tol)
    if args.json:
        payload = {"lhs": res.lhs, "rhs": res.rhs, "holds": res.holds}
        if res.detail:
            payload.update(res.detail)
        print(json.dumps(payload), file=out)
    else:
        print(_fmt(res.lhs), _fmt(res.rhs), str(res.holds).lower(), file=out)
    return EXIT_OK


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return _run(args, out, err)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except (DimensionError, DomainError, RankError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DIMENSION
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=err)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
