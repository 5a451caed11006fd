"""Command-line front end.

Every command builds a RunReport and prints it, either as text or (with
``--json``) as one JSON object.  Exit codes: 0 when every assertion holds,
2 when the mathematical answer is negative (not similar, not isomorphic,
not conjugate), 1 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import Limits, cap_scope
from .conjugacy import Verdict, cyclic_conjugate_field, cyclic_conjugate_ring
from .errors import HoloforgeError, ParseError
from .groups import (
    PermutationGroup,
    abelian_invariants,
    center,
    derived_subgroup,
    holomorph,
    lower_central_series,
    nilpotency_class,
    vector_group,
)
from .groups.structure import is_abelian_subgroup
from .groups.library import abelian, cyclic, dihedral, quaternion
from .matrix import Matrix, read_matrix
from .normal_forms import invariant_factors, is_similar, rcf, similarity_witness, unipotent_partition
from .oracle import are_isomorphic, verify_isomorphism, verify_lindo, witness_summary
from .poly import charpoly, factor, is_squarefree, minpoly
from .reproductions import run_example
from .ring import RingSpec
from .report import RunReport
from .suites import run_suite

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


class Negative(Exception):
    """Raised by a command whose report is complete but whose answer is 'no'."""

    def __init__(self, report: RunReport):
        self.report = report


# ----------------------------------------------------------------------
# input parsing

def _matrix(path: str) -> Matrix:
    try:
        return read_matrix(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _rows(data, ring: RingSpec) -> Matrix:
    try:
        return Matrix.from_rows(ring, data)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix {data!r}: {exc}") from None


def load_group(path: str, cap: int):
    """Read a group description from JSON.

    Supported kinds: holomorph (ring [p, m], n, H list of matrices),
    cyclic (n), abelian (orders), dihedral (n, giving order 2n), quaternion,
    permutation (gens as image lists).
    """
    try:
        with open(path) as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})") from None
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError(f"{path}: expected an object with a 'kind' field")
    kind = spec["kind"]
    try:
        if kind == "holomorph":
            p, m = spec["ring"]
            ring = RingSpec(p, m)
            H = [_rows(h, ring) for h in spec["H"]]
            return holomorph(vector_group(p, m, spec["n"]), H, cap=cap)
        if kind == "cyclic":
            return cyclic(spec["n"])
        if kind == "abelian":
            return abelian(*spec["orders"])
        if kind == "dihedral":
            return dihedral(spec["n"])
        if kind == "quaternion":
            return quaternion()
        if kind == "permutation":
            return PermutationGroup(spec["gens"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed {kind} group ({exc!r})") from None
    raise ParseError(f"{path}: unknown group kind {kind!r}")


# ----------------------------------------------------------------------
# commands

def cmd_rcf(args, limits: Limits) -> RunReport:
    a = _matrix(args.matrix)
    r = RunReport("rcf", {"matrix": args.matrix})
    form, x = rcf(a)
    r.results.update(invariant_factors=invariant_factors(a).to_json(), rcf=form, witness=x)
    r.check("witness conjugates the input to its canonical form", True, x @ a @ x ** -1 == form)
    return r


def cmd_similar(args, limits: Limits) -> RunReport:
    a, b = _matrix(args.a), _matrix(args.b)
    r = RunReport("similar", {"a": args.a, "b": args.b})
    same = is_similar(a, b)
    r.results.update(similar=same, invariant_factors_a=invariant_factors(a).to_json(),
                     invariant_factors_b=invariant_factors(b).to_json())
    if not same:
        r.results["witness"] = None
        raise Negative(r)
    x = similarity_witness(a, b)
    r.results["witness"] = x
    r.check("witness satisfies X a X^-1 = b", True, x @ a @ x ** -1 == b)
    return r


def cmd_minpoly(args, limits: Limits) -> RunReport:
    a = _matrix(args.matrix)
    r = RunReport("minpoly", {"matrix": args.matrix})
    mu, chi = minpoly(a), charpoly(a)
    r.results.update(minpoly=list(mu.coeffs), charpoly=list(chi.coeffs), squarefree=is_squarefree(mu),
                     factors=[[list(q.coeffs), e] for q, e in factor(mu)], display=str(mu))
    r.check("minimal polynomial divides characteristic polynomial", True, mu.divides(chi))
    return r


def cmd_partition(args, limits: Limits) -> RunReport:
    a = _matrix(args.matrix)
    r = RunReport("partition", {"matrix": args.matrix})
    part = unipotent_partition(a)
    r.results.update(partition=list(part.multiplicities), block_sizes=part.block_sizes)
    r.check("block sizes add up to the dimension", a.rows, part.dimension)
    return r


def cmd_holiso(args, limits: Limits) -> RunReport:
    a, b = _matrix(args.a), _matrix(args.b)
    r = RunReport("holiso", {"a": args.a, "b": args.b, "p": args.p, "n": args.n})
    if args.p is not None and a.ring.p != args.p:
        raise ParseError(f"--p {args.p} does not match the matrix files (p = {a.ring.p})")
    if args.n is not None and a.rows != args.n:
        raise ParseError(f"--n {args.n} does not match the matrix size {a.rows}")
    dec = cyclic_conjugate_field(a, b)
    ok = dec.is_conjugate
    r.results.update(isomorphic=ok, exponent=dec.exponent,
                     witness=dec.conjugator if ok else None,
                     separating_invariant=dec.separating_invariant)
    if not ok:
        raise Negative(r)
    x = dec.conjugator
    r.check("witness satisfies X a X^-1 = b^i", True, x @ a @ x ** -1 == b ** dec.exponent)
    return r


def cmd_conj_ring(args, limits: Limits) -> RunReport:
    a, b = _matrix(args.a), _matrix(args.b)
    budget = args.budget if args.budget is not None else limits.ring_budget
    r = RunReport("conj-ring", {"a": args.a, "b": args.b, "budget": budget, "seed": limits.seed})
    dec = cyclic_conjugate_ring(a, b, budget=budget, seed=limits.seed)
    r.results.update(dec.to_json())
    if dec.verdict is not Verdict.CONJUGATE:
        raise Negative(r)
    x = dec.conjugator
    r.check("witness satisfies X a X^-1 = b^i", True, x @ a @ x ** -1 == b ** dec.exponent)
    return r


def cmd_oracle_iso(args, limits: Limits) -> RunReport:
    G, H = load_group(args.g1, limits.cap), load_group(args.g2, limits.cap)
    budget = args.budget if args.budget is not None else limits.oracle_budget
    r = RunReport("oracle-iso", {"g1": args.g1, "g2": args.g2, "budget": budget, "seed": limits.seed})
    ok, f = are_isomorphic(G, H, budget=budget, seed=limits.seed)
    r.results.update(isomorphic=ok, orders=[G.order(), H.order()],
                     witness=witness_summary(G, f) if ok else None)
    if not ok:
        raise Negative(r)
    r.check("witness passes homomorphism and bijectivity checks", True, verify_isomorphism(G, H, f, seed=limits.seed))
    return r


def cmd_group_report(args, limits: Limits) -> RunReport:
    G = load_group(args.group, limits.cap)
    r = RunReport("group-report", {"group": args.group})
    D = derived_subgroup(G, cap=limits.cap)
    lcs = lower_central_series(G, cap=limits.cap)
    inv = abelian_invariants(D) if is_abelian_subgroup(G, D) else None
    r.results.update(order=G.order(), derived_order=D.order(),
                     derived_invariants=list(inv.divisors) if inv is not None else None,
                     lcs_orders=[S.order() for S in lcs],
                     center_order=center(G, cap=limits.cap).order(),
                     nilpotency_class=nilpotency_class(G, cap=limits.cap))
    return r


def cmd_verify_lindo(args, limits: Limits) -> RunReport:
    budget = args.budget if args.budget is not None else limits.oracle_budget
    r = RunReport("verify-lindo", {"p": args.p, "n": args.n, "scope": args.scope})
    rep = verify_lindo(args.p, args.n, scope=args.scope, budget=budget)
    r.results.update(rep.to_dict())
    r.check("decision agrees with the oracle on every pair", 0, len(rep.disagreements))
    return r


def cmd_verify(args, limits: Limits) -> RunReport:
    return run_suite(args.suite, limits)


def cmd_example(args, limits: Limits) -> RunReport:
    return run_example(args.name, limits, p=args.p, n=args.n, m=args.m)


# ----------------------------------------------------------------------
# parser and entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--seed", type=int, default=None, help="seed for all randomness (default 0)")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (default HOLOFORGE_CAP or 2^20)")

    parser = argparse.ArgumentParser(prog="holoforge", description="Holomorph isomorphism and normal-form tools.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    for name, func, text in [("rcf", cmd_rcf, "rational canonical form with witness"),
                             ("minpoly", cmd_minpoly, "minimal and characteristic polynomial"),
                             ("partition", cmd_partition, "Jordan partition of a unipotent matrix")]:
        add(name, func, text).add_argument("matrix")

    sp = add("similar", cmd_similar, "similarity test over F_p")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("holiso", cmd_holiso, "decide Hol(V,<a>) = Hol(V,<b>) over F_p")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--p", type=int, help="expected prime, checked against the files")
    sp.add_argument("--n", type=int, help="expected dimension, checked against the files")

    sp = add("conj-ring", cmd_conj_ring, "cyclic conjugacy over Z/p^m (three-valued)")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--budget", type=int, help="invertible-candidate search budget")

    sp = add("oracle-iso", cmd_oracle_iso, "brute-force isomorphism test of two small groups")
    sp.add_argument("g1")
    sp.add_argument("g2")
    sp.add_argument("--budget", type=int, help="backtracking node budget")

    add("group-report", cmd_group_report, "order, series and center of a group").add_argument("group")

    sp = add("verify-lindo", cmd_verify_lindo, "cross-check the cyclic-conjugacy decision against the oracle")
    sp.add_argument("--p", type=int, required=True, help="prime")
    sp.add_argument("--n", type=int, required=True, help="dimension")
    sp.add_argument("--scope", choices=["all", "reps"], help="all pairs or class representatives (default by group size)")
    sp.add_argument("--budget", type=int, help="oracle node budget")

    add("verify", cmd_verify, "run a property suite").add_argument("suite")

    sp = add("example", cmd_example, "reproduce a worked example")
    sp.add_argument("name")
    sp.add_argument("--p", type=int, help="prime parameter of the example")
    sp.add_argument("--n", type=int, help="dimension parameter")
    sp.add_argument("--m", type=int, help="exponent of the ring Z/p^m")
    return parser


def _emit(report: RunReport, as_json: bool, negative: bool) -> None:
    if as_json:
        print(report.to_json())
    else:
        lines = report.lines()
        if negative and report.overall:
            lines[0] = lines[0].replace("PASS", "NEGATIVE", 1)
        print("\n".join(lines))
        if report.inputs:
            print(f"  inputs: {json.dumps(report.to_dict()['inputs'])}")
        for k, v in report.to_dict().items():
            if k not in ("command", "inputs", "assertions", "overall", "wall_time"):
                print(f"  {k}: {json.dumps(v)}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    limits = Limits.from_env(cap=args.cap, seed=args.seed)
    try:
        with cap_scope(limits.cap):
            report = args.func(args, limits)
        code = EXIT_OK if report.overall else EXIT_NEGATIVE
    except Negative as neg:
        report, code = neg.report, EXIT_NEGATIVE
    except HoloforgeError as exc:
        msg = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}
        if args.json:
            print(json.dumps(msg, indent=2))
        else:
            print(f"{args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.finish()
    _emit(report, args.json, code == EXIT_NEGATIVE)
    return code


if __name__ == "__main__":
    sys.exit(main())
