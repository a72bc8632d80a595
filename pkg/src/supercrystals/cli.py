"""Command-line interface.

Exit codes: 0 success, 1 property-check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import crystal, graph, linkage, pbw, sweeps
from .weights import ContextError, build_context, parse_weight


def _parse_parities(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ContextError(f"malformed parity list {text!r}") from exc


def _context(args):
    parities = _parse_parities(args.parities)
    m = parities.count(0)
    return build_context(m, len(parities) - m, parities, args.p)


def _parse_index_set(text: str):
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(x) for x in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="supercrystals",
        description="Dual crystal structure, linkage invariants, and lowering "
        "operators for GL(m|n) weights in arbitrary characteristic.",
    )
    top.add_argument("--p", type=int, default=0, help="characteristic (0 or prime)")
    top.add_argument(
        "--parities", required=True, help="comma-separated 0/1 parity sequence"
    )
    top.add_argument("--format", choices=("text", "json", "dot"), default="text")
    top.add_argument("--out", help="write output to this file instead of stdout")
    # accept --format/--out before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "dot"), default=argparse.SUPPRESS
    )
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="command", required=True)

    sig = sub.add_parser("signature", help="raw and reduced r-signatures", parents=[common])
    sig.add_argument("--weight", required=True)
    sig.add_argument("--r", default="all")

    app = sub.add_parser("apply", help="apply a star operator", parents=[common])
    app.add_argument("--op", choices=("estar", "fstar"), required=True)
    app.add_argument("--r", type=int, required=True)
    app.add_argument("--weight", required=True)

    cls = sub.add_parser("classify", help="normal/good/conormal/cogood at a position", parents=[common])
    cls.add_argument("--weight", required=True)
    cls.add_argument("--i", type=int, required=True)
    cls.add_argument("--r", type=int)

    gra = sub.add_parser("graph", help="explore the crystal component", parents=[common])
    gra.add_argument("--weight", required=True)
    gra.add_argument("--depth", type=int, default=1)

    blk = sub.add_parser("blocks", help="partition weights by their wt value", parents=[common])
    blk.add_argument(
        "--weights",
        help="path to a JSON array of weights (stdin when omitted)",
    )

    pb = sub.add_parser("pbw", help="symbolic enveloping-algebra operations", parents=[common])
    pbsub = pb.add_subparsers(dest="pbw_command", required=True)

    low = pbsub.add_parser("lower", help="the lowering operator S_{i,j}(A)", parents=[common])
    low.add_argument("--i", type=int, required=True)
    low.add_argument("--j", type=int, required=True)
    low.add_argument("--A", default="")

    rec = pbsub.add_parser("check-recurrence", parents=[common])
    rec.add_argument("--i", type=int, required=True)
    rec.add_argument("--j", type=int, required=True)
    rec.add_argument("--A", required=True)
    rec.add_argument("--k", type=int, required=True)

    com = pbsub.add_parser("check-commutator", parents=[common])
    com.add_argument("--i", type=int, required=True)
    com.add_argument("--j", type=int, required=True)
    com.add_argument("--A", default="")
    com.add_argument("--l", type=int, required=True)

    cen = pbsub.add_parser("check-central", parents=[common])
    cen.add_argument("--r", type=int, required=True)

    ver = pbsub.add_parser("verma-scalar", parents=[common])
    ver.add_argument("--weight", required=True)
    ver.add_argument("--r", type=int, required=True)

    vfy = sub.add_parser("verify", help="run a verification suite", parents=[common])
    vfy.add_argument("suite", choices=sweeps.SUITES + ("all",))
    vfy.add_argument("--max-rank", type=int, default=4)
    vfy.add_argument("--max-r", type=int, default=4)
    vfy.add_argument("--coeff-window", type=int, default=4)
    vfy.add_argument("--p-list", default="0,2,3,5")
    vfy.add_argument("--seed", type=int, default=0)
    vfy.add_argument("--processes", type=int, default=None)
    vfy.add_argument(
        "--pin-parities",
        action="store_true",
        help="restrict the sweep to the context given by --parities",
    )
    return top


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_signature(ctx, args) -> int:
    lam = parse_weight(args.weight, ctx)
    if args.r == "all":
        rs = crystal.relevant_residues(ctx, lam)
    else:
        rs = [int(args.r)]
    rows = []
    for r in rs:
        raw = crystal.r_signature(ctx, lam, r)
        if args.r == "all" and raw.is_trivial():
            continue
        rows.append((r, raw, crystal.reduce_signature(raw)))
    if args.format == "json":
        _emit(
            args,
            json.dumps(
                [
                    {"r": r, "raw": str(raw), "reduced": str(red)}
                    for r, raw, red in rows
                ]
            ),
        )
    elif len(rows) == 1 and args.r != "all":
        _, raw, red = rows[0]
        _emit(args, f"{raw} / {red}")
    else:
        _emit(args, "\n".join(f"r={r}: {raw} / {red}" for r, raw, red in rows))
    return 0


def cmd_apply(ctx, args) -> int:
    lam = parse_weight(args.weight, ctx)
    op = crystal.e_star if args.op == "estar" else crystal.f_star
    out = op(ctx, lam, args.r)
    if args.format == "json":
        _emit(args, json.dumps(list(out) if out is not None else None))
    else:
        _emit(args, "undefined" if out is None else ",".join(str(c) for c in out))
    return 0


def cmd_classify(ctx, args) -> int:
    lam = parse_weight(args.weight, ctx)
    from .weights import residue_int

    r = args.r if args.r is not None else residue_int(ctx, lam, args.i)
    cls = crystal.classify_index(ctx, lam, args.i, r)
    if args.format == "json":
        _emit(args, json.dumps({"kind": cls.kind, "r": cls.r}))
    else:
        _emit(args, f"{cls.kind} (r={cls.r})")
    return 0


def cmd_graph(ctx, args) -> int:
    lam = parse_weight(args.weight, ctx)
    g = graph.crystal_component(ctx, lam, args.depth)
    if args.format == "dot":
        _emit(args, g.to_dot())
    else:
        _emit(args, json.dumps(g.to_json()))
    return 0


def cmd_blocks(ctx, args) -> int:
    if args.weights:
        with open(args.weights) as fh:
            data = json.load(fh)
    else:
        data = json.load(sys.stdin)
    weights = [tuple(int(c) for c in w) for w in data]
    for w in weights:
        if len(w) != ctx.rank:
            raise ValueError(f"weight {list(w)} has wrong length for the context")
    blocks = linkage.partition_blocks(ctx, weights)
    _emit(
        args,
        json.dumps(
            [
                {"wt": key.to_json(), "weights": [list(w) for w in ws]}
                for key, ws in blocks
            ]
        ),
    )
    return 0


def cmd_pbw(ctx, args) -> int:
    if args.pbw_command == "lower":
        a_set = _parse_index_set(args.A)
        _emit(args, pbw.s_element(ctx, args.i, args.j, a_set).dump())
        return 0
    if args.pbw_command == "check-recurrence":
        ok = pbw.recurrence_check(ctx, args.i, args.j, _parse_index_set(args.A), args.k)
        _emit(args, "pass" if ok else "FAIL")
        return 0 if ok else 1
    if args.pbw_command == "check-commutator":
        result = pbw.commutator_lemma_check(
            ctx, args.i, args.j, _parse_index_set(args.A), args.l
        )
        if result is None:
            raise ValueError("input is outside the four cases of the lemma")
        _emit(args, "pass" if result else "FAIL")
        return 0 if result else 1
    if args.pbw_command == "check-central":
        zt = pbw.z_tilde_element(ctx, args.r)
        bad = []
        for i in range(1, ctx.rank + 1):
            for j in range(1, ctx.rank + 1):
                if not pbw.SuperElt.gen(ctx, i, j).bracket(zt).is_zero():
                    bad.append((i, j))
        _emit(args, "pass" if not bad else f"FAIL at generators {bad}")
        return 0 if not bad else 1
    if args.pbw_command == "verma-scalar":
        lam = parse_weight(args.weight, ctx)
        z = pbw.z_element(ctx, args.r).reduce_mod_J()
        got = pbw.verma_scalar(z, lam)
        want = linkage.z_scalar(ctx, lam, args.r)
        status = "pass" if got == want else "FAIL"
        _emit(args, f"{got} (predicted {want}): {status}")
        return 0 if got == want else 1
    raise ValueError(f"unknown pbw subcommand {args.pbw_command!r}")


def cmd_verify(ctx, args) -> int:
    p_list = [int(x) for x in args.p_list.split(",")]
    pin = ctx.parities if args.pin_parities else None
    if pin is not None:
        p_list = [ctx.p]
    reports = sweeps.run_suite(
        args.suite,
        max_rank=args.max_rank,
        coeff_window=args.coeff_window,
        p_list=p_list,
        parities_pin=pin,
        seed=args.seed,
        processes=args.processes,
        max_r=args.max_r,
    )
    failures = 0
    lines = []
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        line = f"[{status}] {rep.name}: {rep.checks} checks, {rep.failures} failures"
        if rep.counterexample:
            line += f"\n       first counterexample: {rep.counterexample}"
        lines.append(line)
        failures += rep.failures
    _emit(args, "\n".join(lines))
    return 0 if failures == 0 else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = _context(args)
        if args.command == "signature":
            return cmd_signature(ctx, args)
        if args.command == "apply":
            return cmd_apply(ctx, args)
        if args.command == "classify":
            return cmd_classify(ctx, args)
        if args.command == "graph":
            return cmd_graph(ctx, args)
        if args.command == "blocks":
            return cmd_blocks(ctx, args)
        if args.command == "pbw":
            return cmd_pbw(ctx, args)
        if args.command == "verify":
            return cmd_verify(ctx, args)
        raise ValueError(f"unknown command {args.command!r}")
    except (ContextError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
