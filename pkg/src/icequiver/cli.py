"""Command line front end: ``icequiver <command> ...``.

Exit status is 0 on success, 1 when a computed verdict differs from
``--expect`` (or a suite check fails), and 2 for unusable input.
"""

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .dg import DgError, build_relative_ginzburg, ginzburg_functor, verify_d_squared, verify_functor
from .exactness import CONCENTRATED, INAPPLICABLE, NOT_CONCENTRATED, ExactnessError, degree0_verdict
from .fileformat import FormatError, read_quiver
from .jacobian import boundary_algebra, relative_jacobian
from .modules import ModuleError, global_dimension
from .quiver import QuiverError
from .repfin import (
    RepFinError,
    auslander_algebra,
    check_rigidity,
    cluster_tilting_module,
    dynkin_quiver,
    dynkin_type,
    endomorphism_algebra,
    extract_h0_algebra,
    higher_end_algebra,
    higher_preprojective,
    isomorphic,
    preprojective_classical,
    self_injectivity,
    stable_auslander,
)
from .rewriting import RewritingError

VERDICTS = {"concentrated": CONCENTRATED, "not_concentrated": NOT_CONCENTRATED, "inapplicable": INAPPLICABLE}
INPUT_ERRORS = (FormatError, QuiverError, RewritingError, RepFinError, DgError, ExactnessError, ModuleError)


class InputError(Exception):
    pass


def _digest(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _order(text):
    if text is None:
        return None
    return [s.strip() for s in text.split(",") if s.strip()]


def _load(path):
    try:
        return read_quiver(path)
    except OSError as exc:
        raise InputError(f"{path}: cannot read file: {exc.strerror}") from None


# ---- commands --------------------------------------------------------------


def cmd_ginzburg(args):
    iq, W = _load(args.file)
    P = build_relative_ginzburg(iq, W)
    dd = verify_d_squared(P)
    fn = verify_functor(ginzburg_functor(iq, W))
    result = {
        "presentation": P.to_dict(),
        "d_squared_zero": dd.ok,
        "d_squared_offenders": [list(x) for x in dd.offenders],
        "functor_commutes": fn.ok,
        "functor_offenders": [list(x) for x in fn.offenders],
    }
    lines = [P.format(), "", f"d^2 = 0: {'ok' if dd.ok else 'FAILED'}"]
    lines += [f"  d(d({n})) = {v}" for n, v in dd.offenders]
    lines.append(f"functor from the boundary algebra commutes with d: {'ok' if fn.ok else 'FAILED'}")
    lines += [f"  {n}: {v}" for n, v in fn.offenders]
    return result, "\n".join(lines), 0


def cmd_jacobian(args):
    iq, W = _load(args.file)
    J, cert = relative_jacobian(iq, W, args.max_degree, _order(args.order))
    R = J.rewriting
    result = {
        "certificate": str(cert),
        "dimension": J.dim,
        "rules": [{"lead": str(lead), "tail": str(tail)} for lead, tail in R.rule_list()],
        "algebra": J.dump(),
    }
    lines = [f"certificate: {cert}", f"dimension: {J.dim}", "basis: " + ", ".join(J.labels), "rewriting rules:"]
    lines += ["  " + s for s in R.format().splitlines()] or ["  (none)"]
    return result, "\n".join(lines), 0


def cmd_concentration(args):
    iq, W = _load(args.file)
    v = degree0_verdict(iq, W, args.max_degree, _order(args.order))
    result = v.to_dict()
    lines = []
    for r in v.reports:
        kind = "frozen" if r.frozen else "unfrozen"
        status = "exact" if r.exact else "NOT exact"
        lines.append(f"vertex {r.vertex} ({kind}): dims {r.position_dims}, homology {r.homology_dims}: {status}")
    line = f"verdict: {v.status}"
    if v.witness is not None:
        line += f" (witness vertex {v.witness})"
    if v.reason:
        line += f" ({v.reason})"
    lines.append(line)
    code = 0
    if args.expect is not None:
        want = VERDICTS[args.expect.lower()]
        result["expected"] = want
        result["matches_expected"] = want == v.status
        if want != v.status:
            lines.append(f"expected {want}")
            code = 1
    return result, "\n".join(lines), code


def cmd_preprojective(args):
    if args.dynkin:
        q = dynkin_quiver(args.dynkin)
    else:
        iq, _ = _load(args.file)
        q = iq.quiver
    kind = dynkin_type(q)
    P1 = preprojective_classical(q, args.max_degree)
    P2 = higher_preprojective(q)
    iso = isomorphic(P1, P2, {v: v for v in P1.vertices})
    selfinj = self_injectivity(P1)
    result = {
        "dynkin_type": kind,
        "dimension_classical": P1.dim,
        "dimension_higher": P2.dim,
        "isomorphic": iso,
        "self_injective": selfinj,
        "algebra": P1.dump(),
    }
    lines = [
        f"Dynkin type: {kind}",
        f"preprojective algebra (generators and relations): dimension {P1.dim}",
        f"preprojective algebra (tau-orbit construction): dimension {P2.dim}",
        f"isomorphic: {iso}",
        f"self-injective: {selfinj}",
        "basis: " + ", ".join(P1.labels),
    ]
    return result, "\n".join(lines), 0


def cmd_auslander(args):
    if args.n != 1:
        raise InputError(f"-n {args.n}: only n = 1 is supported")
    q = dynkin_quiver(args.dynkin)
    Aus = auslander_algebra(q)
    H = higher_end_algebra(q, args.n)
    A, e = extract_h0_algebra(H)
    B = boundary_algebra(A, e)
    Pi = preprojective_classical(q)
    st = stable_auslander(q)
    T = cluster_tilting_module(A, e)
    E = endomorphism_algebra(T.summands)
    result = {
        "dynkin_type": dynkin_type(q),
        "auslander": {"dimension": Aus.dim, "global_dimension": global_dimension(Aus, 8)},
        "h0_algebra": {
            "dimension": A.dim,
            "global_dimension": global_dimension(A, 8),
            "grades": {str(g): d for g, d in sorted(H.grade_dims().items())},
            "boundary_vertices": list(e),
        },
        "boundary": {"dimension": B.dim, "isomorphic_to_preprojective": isomorphic(B, Pi)},
        "stable_auslander_dimension": st.dim,
        "tilting_module": {
            "dimension": T.module.dim,
            "summands": [{"vertex": v, "dimension_vector": S.dimension_vector()} for v, S in T.summands],
            "rigid": check_rigidity(T.module, 2, 4),
            "endomorphism_dimension": E.dim,
            "endomorphisms_isomorphic_to_h0": isomorphic(E, A, {v: v for v in A.vertices}),
        },
    }
    a, h, b, t = result["auslander"], result["h0_algebra"], result["boundary"], result["tilting_module"]
    lines = [
        f"Auslander algebra: dimension {a['dimension']}, global dimension {a['global_dimension']}",
        f"H0 algebra: dimension {h['dimension']}, global dimension {h['global_dimension']}, grades {h['grades']}",
        f"boundary algebra: dimension {b['dimension']}, isomorphic to preprojective: {b['isomorphic_to_preprojective']}",
        f"stable Auslander algebra: dimension {st.dim}",
        f"Je: dimension {t['dimension']}, {len(t['summands'])} summands, rigid: {t['rigid']}",
        f"End(Je): dimension {t['endomorphism_dimension']}, isomorphic to H0: {t['endomorphisms_isomorphic_to_h0']}",
    ]
    return result, "\n".join(lines), 0


def cmd_check(args):
    from .suite import run_suite

    results = run_suite()
    result = {
        "suite": args.suite,
        "criteria": [
            {
                "number": r.number,
                "title": r.title,
                "passed": r.passed,
                "checks": [{"check": d, "passed": ok, "detail": detail} for d, ok, detail in r.checks],
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    lines = [r.line() for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return result, "\n".join(lines), 0 if result["passed"] else 1


# ---- driver ----------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="icequiver", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"icequiver {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, degree=True, order=True):
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        sp.add_argument("--timing", action="store_true", help="include elapsed time in the report")
        if degree:
            sp.add_argument("--max-degree", type=int, default=None, metavar="D", help="rewriting degree bound")
        if order:
            sp.add_argument("--order", default=None, metavar="A,B,...", help="arrow precedence for the path order")

    sp = sub.add_parser("ginzburg", help="relative Ginzburg dg algebra and its checks")
    sp.add_argument("file")
    common(sp, degree=False, order=False)
    sp.set_defaults(func=cmd_ginzburg)

    sp = sub.add_parser("jacobian", help="frozen Jacobian algebra via rewriting")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_jacobian)

    sp = sub.add_parser("concentration", help="exactness test for degree-0 concentration")
    sp.add_argument("file")
    sp.add_argument("--expect", choices=sorted(VERDICTS), type=str.lower, default=None)
    common(sp)
    sp.set_defaults(func=cmd_concentration)

    sp = sub.add_parser("preprojective", help="preprojective algebra of a Dynkin quiver, two ways")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--dynkin", metavar="TYPE", help="A_n, D_n or E_6..8 with the standard orientation")
    src.add_argument("file", nargs="?")
    common(sp, order=False)
    sp.set_defaults(func=cmd_preprojective)

    sp = sub.add_parser("auslander", help="Auslander and higher algebras of a Dynkin quiver")
    sp.add_argument("--dynkin", metavar="TYPE", required=True)
    sp.add_argument("-n", type=int, default=1)
    common(sp, degree=False, order=False)
    sp.set_defaults(func=cmd_auslander)

    sp = sub.add_parser("check", help="run the built-in example suite")
    sp.add_argument("--suite", choices=["paper-examples"], default="paper-examples")
    common(sp, degree=False, order=False)
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        result, text, code = args.func(args)
    except FormatError as exc:
        print(exc.diagnostic(), file=sys.stderr)
        return 2
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        where = getattr(args, "file", None) or "icequiver"
        print(f"{where}: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start

    if args.json:
        report = {"tool": "icequiver", "version": __version__, "command": ["icequiver"] + argv}
        path = getattr(args, "file", None)
        if path:
            report["input"] = {"path": path, "sha256": _digest(path)}
        report["result"] = result
        if args.timing:
            report["timing_seconds"] = round(elapsed, 3)
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(text)
        if args.timing:
            print(f"elapsed: {elapsed:.3f}s")
    return code


if __name__ == "__main__":
    sys.exit(main())
