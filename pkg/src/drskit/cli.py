"""Command-line front end.

Subcommands: ``verify``, ``solve``, ``bounds``, ``construct``, ``gadget``,
``tables``.  Results go to stdout (JSON or CSV, byte-deterministic for fixed
inputs), diagnostics to stderr.  Exit codes: 0 pass/success, 1 verified-fail
or suboptimal under budget, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import families, npc
from .errors import FormatError, NotConnectedError, SizeCapError
from .graph import read_edge_list
from .resolving import ddrs_witness, doubly_resolving_witness, resolving_witness
from .solver import solve_beta, solve_phi, solve_psi
from .tables import bounds_csv, table_csv


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_id_set(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise FormatError(f"bad vertex set {text!r}: comma-separated ints") from exc


def _load_provider(args):
    """Graph file or family descriptor; families stay closed-form oracles."""
    if args.graph is not None:
        with open(args.graph, "r", encoding="utf-8") as fh:
            return read_edge_list(fh.read()), False
    return families.parse_family(args.family), True


def _cmd_verify(args) -> int:
    g, _ = _load_provider(args)
    landmarks = _parse_id_set(args.set)
    if args.kind == "resolving":
        witness = resolving_witness(g, landmarks)
    elif args.kind == "doubly":
        witness = doubly_resolving_witness(g, landmarks)
    else:
        if args.anchor is None:
            raise FormatError("--kind ddrs requires --anchor")
        witness = ddrs_witness(g, args.anchor, landmarks)
    out = {"kind": args.kind, "verdict": witness is None}
    if witness is not None:
        out["witness_pair"] = list(witness)
    _emit(out)
    return 0 if witness is None else 1


def _cmd_solve(args) -> int:
    g, is_family = _load_provider(args)
    if args.threads < 1:
        raise FormatError("--threads must be >= 1")
    if args.objective == "beta":
        res = solve_beta(g, args.budget, vertex_transitive=is_family)
    elif args.objective == "psi":
        res = solve_psi(g, args.budget, vertex_transitive=is_family)
    else:
        anchor = args.anchor
        if anchor is None:
            if not is_family:
                raise FormatError("--objective phi requires --anchor for graphs")
            anchor = 0  # families are vertex-transitive: any anchor is lossless
        res = solve_phi(g, anchor, args.budget)
    _emit(res.to_json())
    return 0 if res.optimal else 1


def _cmd_bounds(args) -> int:
    if args.upto < 1:
        raise FormatError("--upto must be >= 1")
    sys.stdout.write(bounds_csv(args.upto))
    return 0


def _cmd_construct(args) -> int:
    fam = families.parse_family(args.family)
    kind = args.kind
    needs_input = kind in ("fold", "unfold", "double")
    if needs_input and args.input_set is None:
        raise FormatError(f"--kind {kind} requires --input-set")
    if kind == "ddrs-odd":
        _expect_family(fam, families.FoldedFamily, kind)
        out = families.folded_ddrs_odd(fam.n)
        verified = ddrs_witness(fam, 0, out) is None
    elif kind == "ddrs-even":
        _expect_family(fam, families.FoldedFamily, kind)
        out = families.folded_ddrs_even(fam.n)
        verified = ddrs_witness(fam, 0, out) is None
    elif kind == "hamming-const":
        _expect_family(fam, families.HammingFamily, kind)
        out = families.hamming_ddrs_constant(fam.n, fam.q)
        verified = ddrs_witness(fam, 0, out) is None
    elif kind == "hamming-levels":
        _expect_family(fam, families.HammingFamily, kind)
        out = families.hamming_ddrs_levels(fam.n, fam.q)
        verified = ddrs_witness(fam, 0, out) is None
    elif kind == "fold":
        _expect_family(fam, families.FoldedFamily, kind)
        out = families.fold_resolving_map(fam.n, _parse_id_set(args.input_set))
        verified = resolving_witness(families.CubeFamily(fam.n), out) is None
    elif kind == "unfold":
        _expect_family(fam, families.CubeFamily, kind)
        out = families.unfold_resolving_map(fam.n, _parse_id_set(args.input_set))
        verified = resolving_witness(families.FoldedFamily(fam.n), out) is None
    else:  # double
        _expect_family(fam, families.CubeFamily, kind)
        out = families.double_resolving_map(fam.n, _parse_id_set(args.input_set))
        verified = resolving_witness(families.FoldedFamily(fam.n + 1), out) is None
    _emit(
        {
            "family": fam.descriptor,
            "kind": kind,
            "set": list(out),
            "size": len(out),
            "verified": verified,
        }
    )
    return 0 if verified else 1


def _expect_family(fam, cls, kind: str) -> None:
    if not isinstance(fam, cls):
        raise FormatError(f"--kind {kind} does not apply to {fam.descriptor}")


def _cmd_gadget(args) -> int:
    with open(args.file_3dm, "r", encoding="utf-8") as fh:
        inst = npc.parse_3dm(fh.read())
    gadget = npc.build_gadget(inst, args.variant, args.copies)
    from .graph import format_edge_list

    sys.stdout.write(format_edge_list(gadget.graph))
    if args.roles is not None:
        with open(args.roles, "w", encoding="utf-8") as fh:
            fh.write(npc.roles_sidecar(gadget))
    if args.matching is not None:
        matching = _parse_id_set(args.matching)
        try:
            landmarks = npc.witness_set(gadget, matching)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
        witness = doubly_resolving_witness(gadget.graph, landmarks)
        verdict = {
            "landmarks": list(landmarks),
            "size": len(landmarks),
            "verdict": witness is None,
        }
        if witness is not None:
            verdict["witness_pair"] = list(witness)
        print(json.dumps(verdict, sort_keys=True), file=sys.stderr)
        return 0 if witness is None else 1
    return 0


def _cmd_tables(args) -> int:
    sys.stdout.write(table_csv(args.which, args.limit))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drskit",
        description="Exact resolving / doubly resolving set computations on "
        "graphs, hypercubes, Hamming graphs and folded hypercubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph", help="edge-list file (first line 'n m')")
        src.add_argument("--family", help="family descriptor: q<n>, f<n>, h<n>,<q>")

    p = sub.add_parser("verify", help="verify a landmark set")
    add_source(p)
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--kind", required=True, choices=["resolving", "doubly", "ddrs"])
    p.add_argument("--anchor", type=int, help="anchor vertex (ddrs only)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="exact minimum landmark set")
    add_source(p)
    p.add_argument("--objective", required=True, choices=["beta", "psi", "phi"])
    p.add_argument("--anchor", type=int, help="anchor vertex (phi)")
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="solver threads (results are independent of this)",
    )
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("bounds", help="CSV of upper bounds P(n)")
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("construct", help="run an explicit landmark construction")
    p.add_argument("--family", required=True)
    p.add_argument(
        "--kind",
        required=True,
        choices=[
            "ddrs-odd",
            "ddrs-even",
            "hamming-const",
            "hamming-levels",
            "fold",
            "unfold",
            "double",
        ],
    )
    p.add_argument("--input-set", help="input landmark set (fold/unfold/double)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("gadget", help="build a 3DM reduction gadget")
    p.add_argument("--3dm", dest="file_3dm", required=True, help="3DM instance file")
    p.add_argument("--variant", required=True, choices=list(npc.VARIANTS))
    p.add_argument("--copies", type=int, default=1)
    p.add_argument("--matching", help="perfect matching triple indexes to verify")
    p.add_argument("--roles", help="write the role-map sidecar to this file")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("tables", help="reproduce a published table as CSV")
    p.add_argument("--which", type=int, required=True, choices=[1, 2, 3, 4, 5])
    p.add_argument("--limit", type=int, default=6, help="largest n solved exactly")
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (FormatError, NotConnectedError, SizeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
