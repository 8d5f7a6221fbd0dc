"""Command-line surface: construct, verify, solve and compare.

JSON payloads go to stdout, human-readable diagnostics to stderr, so the
subcommands compose in shell pipelines (model | deform | verify).  Exit
status is 0 for success, 1 for a verification failure and 2 for usage or
parse errors.  Nothing is randomized; reproducibility is structural.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import deformation as dfm
from . import families
from .filiform import NotNilpotentError, is_filiform, model, order_nilindex
from .graded_core import (
    algebra_from_json,
    algebra_to_json,
    verify_jacobi,
)
from .sl2 import dim_C_by_weights

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    """Exit status plus the two output streams (kept strictly separate)."""

    status: int
    report: str = ""
    payload: str | None = None


class UsageError(Exception):
    """Bad input discovered after argument parsing (exit status 2)."""


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _load_algebra(path: str):
    obj = _parse_json(_read_text(path), f"{path}")
    try:
        return algebra_from_json(obj)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_deformation(path: str):
    obj = _parse_json(_read_text(path), f"{path}")
    try:
        return dfm.deformation_from_json(obj)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_model(args) -> CommandResult:
    alg = model(args.n, args.m, args.p)
    return CommandResult(EXIT_OK, payload=_dump(algebra_to_json(alg)))


def cmd_verify(args) -> CommandResult:
    alg = _load_algebra(args.path)
    report = verify_jacobi(alg)
    if report.ok:
        return CommandResult(EXIT_OK, report="all Jacobi identities hold")
    return CommandResult(EXIT_VERIFICATION, report=report.describe())


def cmd_dim_c(args) -> CommandResult:
    if args.method in ("weights", "both"):
        by_weights = dim_C_by_weights(args.n, args.m)
    if args.method in ("kernel", "both"):
        by_kernel = dfm.solve_subspace_C(args.n, args.m).dimension
    if args.method == "weights":
        return CommandResult(EXIT_OK, payload=f"weights={by_weights}")
    if args.method == "kernel":
        return CommandResult(EXIT_OK, payload=f"kernel={by_kernel}")
    line = f"weights={by_weights} kernel={by_kernel}"
    if by_weights != by_kernel:
        return CommandResult(EXIT_VERIFICATION, payload=line,
                             report="method mismatch: weight count and kernel "
                                    "dimension disagree")
    return CommandResult(EXIT_OK, payload=line)


def cmd_deform(args) -> CommandResult:
    psi = _load_deformation(args.psi)
    if (psi.n, psi.m) != (args.n, args.m):
        raise UsageError(f"deformation is for (n, m) = ({psi.n}, {psi.m}), "
                         f"requested model is ({args.n}, {args.m})")
    mu0 = model(args.n, args.m)
    failures = []
    report = dfm.is_infinitesimal(mu0, psi)
    if not report.ok:
        first = report.violations[0]
        failures.append(f"infinitesimal-deformation equation {first.identity} "
                        f"violated at {first.indices}")
    integ = dfm.is_integrable(psi)
    if not integ.ok:
        first = integ.violations[0]
        failures.append(f"integrability equation {first.identity} "
                        f"violated at {first.indices}")
    if failures and not args.force:
        return CommandResult(EXIT_VERIFICATION,
                             report="; ".join(failures) + " (use --force to emit anyway)")
    alg = dfm.deform(mu0, psi, force=bool(failures))
    payload = algebra_to_json(alg)
    if failures:
        payload["warning"] = "FORCED OUTPUT: " + "; ".join(failures)
    return CommandResult(EXIT_OK, payload=_dump(payload))


def cmd_nilindex(args) -> CommandResult:
    alg = _load_algebra(args.path)
    try:
        nil = order_nilindex(alg)
    except NotNilpotentError as exc:
        return CommandResult(EXIT_VERIFICATION, report=str(exc))
    out = {"p0": nil.p0, "p1": nil.p1}
    if nil.p2 is not None:
        out["p2"] = nil.p2
    out["filiform"] = is_filiform(alg).filiform
    return CommandResult(EXIT_OK, payload=_dump(out))


def cmd_basis_c(args) -> CommandResult:
    n, m = args.n, args.m
    source = args.source
    if source == "auto":
        source = "theorem4" if (m == 3 and n % 2 == 1) else "kernel"
    if source == "theorem4":
        if m != 3 or n % 2 == 0:
            raise UsageError("the explicit basis is available for m = 3 and odd n; "
                             "use --source kernel otherwise")
        named = families.theorem4_basis(n)
        payload = {
            "n": n, "m": m, "source": "theorem4",
            "dimension": len(named),
            "names": [f"{nd.name}({nd.parameter})" for nd in named],
            "basis": [dfm.deformation_to_json(nd.deformation) for nd in named],
        }
    else:
        kb = dfm.solve_subspace_C(n, m)
        members = [dfm.deformation_from_vector(kb.variables, vec, n, m)
                   for vec in kb.vectors]
        payload = {
            "n": n, "m": m, "source": "kernel",
            "dimension": kb.dimension,
            "basis": [dfm.deformation_to_json(psi) for psi in members],
        }
    return CommandResult(EXIT_OK, payload=_dump(payload))


def cmd_family(args) -> CommandResult:
    name = args.name
    try:
        if name in ("phi1", "phi3", "phi13"):
            if args.m not in (None, 3):
                raise UsageError(f"family {name} is defined for m = 3")
            builder = {"phi1": families.phi1, "phi3": families.phi3,
                       "phi13": families.phi13}[name]
            nd = builder(args.n, args.param)
        elif name == "psi-k":
            if args.m is None:
                raise UsageError("family psi-k needs --m")
            nd = families.psi_k(args.n, args.m, args.param)
        else:  # psi-t
            if args.m is None:
                raise UsageError("family psi-t needs --m")
            nd = families.psi_t(args.n, args.m, args.param)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return CommandResult(EXIT_OK,
                         payload=_dump(dfm.deformation_to_json(nd.deformation)),
                         report=f"{nd.name}({nd.parameter}) on model({nd.n}, {nd.m})")


def cmd_example(args) -> CommandResult:
    if args.name == "poincare":
        if args.dim is None:
            raise UsageError("example poincare needs --dim")
        try:
            alg = families.example_poincare(args.dim)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        note = (f"Poincare algebra, D={args.dim}: grade-0 basis lists L(mu,nu) "
                f"pairs lexicographically then P_mu; grade 1 is V_mu at mu+1; "
                f"metric diag(1, -1, ..., -1)")
    else:
        if args.dim is not None:
            raise UsageError("example so23 takes no --dim")
        alg = families.example_so23_adjoint()
        note = ("so(2,3) on its adjoint representation; generators M(a,b) = "
                "E(a,b) g_b - E(b,a) g_a for g = diag(1,1,-1,-1,-1) ordered "
                "lexicographically; symmetric bracket from plain adjoint-matrix "
                "traces (the Killing form)")
    return CommandResult(EXIT_OK, payload=_dump(algebra_to_json(alg)), report=note)


def cmd_decompose_z(args) -> CommandResult:
    n, m = args.n, args.m
    z = dfm.decompose_Z(n, m)

    def basis_json(kb):
        return [dfm.deformation_to_json(dfm.deformation_from_vector(kb.variables, vec, n, m))
                for vec in kb.vectors]

    payload = {
        "n": n, "m": m,
        "dim_a": z.a.dimension, "dim_b": z.b.dimension, "dim_c": z.c.dimension,
        "combined_kernel_dimension": z.combined_dimension,
        "a_basis": basis_json(z.a),
        "b_basis": basis_json(z.b),
        "c_basis": basis_json(z.c),
    }
    status = EXIT_OK if z.consistent else EXIT_VERIFICATION
    report = ("" if z.consistent else
              "decomposition mismatch: block dimensions do not sum to the "
              "combined kernel dimension")
    return CommandResult(status, payload=_dump(payload), report=report)


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieorder3",
        description="Exact computer algebra for graded Lie algebras of order 3.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("model", help="emit a model filiform algebra as JSON")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--p", type=_nonnegative, default=0)
    p.set_defaults(handler=cmd_model)

    p = sub.add_parser("verify", help="check the Jacobi identities of an algebra JSON file")
    p.add_argument("path", help="algebra JSON file, or - for stdin")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("dim-c", help="dimension of the symmetric-bracket deformation space")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--method", choices=("weights", "kernel", "both"), default="both")
    p.set_defaults(handler=cmd_dim_c)

    p = sub.add_parser("deform", help="add a deformation JSON onto a model algebra")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--psi", required=True, help="deformation JSON file, or - for stdin")
    p.add_argument("--force", action="store_true",
                   help="emit even if the deformation fails verification")
    p.set_defaults(handler=cmd_deform)

    p = sub.add_parser("nilindex", help="order-nilindex of an algebra JSON file")
    p.add_argument("path", help="algebra JSON file, or - for stdin")
    p.set_defaults(handler=cmd_nilindex)

    p = sub.add_parser("basis-c", help="emit a basis of the deformation subspace C")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, default=3)
    p.add_argument("--source", choices=("auto", "theorem4", "kernel"), default="auto")
    p.set_defaults(handler=cmd_basis_c)

    p = sub.add_parser("family", help="emit a named deformation family member as JSON")
    p.add_argument("--name", choices=("phi1", "phi3", "phi13", "psi-k", "psi-t"),
                   required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, default=None)
    p.add_argument("--param", type=_positive, required=True,
                   help="the family parameter (s, k or t)")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("example", help="emit one of the concrete example algebras")
    p.add_argument("--name", choices=("poincare", "so23"), required=True)
    p.add_argument("--dim", type=_positive, default=None)
    p.set_defaults(handler=cmd_example)

    p = sub.add_parser("decompose-z", help="block decomposition of the cocycle space")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.set_defaults(handler=cmd_decompose_z)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        result = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if result.payload is not None:
        print(result.payload)
    if result.report:
        print(result.report, file=sys.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
