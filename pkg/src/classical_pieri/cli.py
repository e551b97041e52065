"""Command-line front end.

Groups are named as in the literature: ``sp`` with ``--n`` is Sp_2n, ``o``
with ``--N`` is O_N, ``so`` with ``--N`` is SO_N (odd or even), ``gl`` with
``--N`` is GL_N.  Partitions use the bracket syntax ``"[3,1]"``.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import pieri, suites, tableaux
from .characters import GroupId, LabelError, irreducible_character
from .modification import modify
from .partitions import format_partition, parse_partition
from .symfun import lr_coefficient, lr_product, nl_coefficient, nl_product

__all__ = ["main", "build_parser", "UsageError"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _group(name: str, n: Optional[int], N: Optional[int]) -> GroupId:
    name = name.lower()
    if name == "sp":
        if n is None:
            raise UsageError("group sp needs --n (Sp_2n)")
        return GroupId.sp(n)
    if N is None:
        raise UsageError(f"group {name} needs --N")
    if name == "o":
        return GroupId.o(N)
    if name == "gl":
        return GroupId.gl(N)
    if name == "so":
        if N < 2:
            raise UsageError("SO_N needs N >= 2")
        return GroupId.so_odd(N // 2) if N % 2 else GroupId.so_even(N // 2)
    raise UsageError(f"unknown group {name!r}")


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _rank_flags(p):
    p.add_argument("--n", type=int, help="rank n for Sp_2n")
    p.add_argument("--N", type=int, help="N for O_N, SO_N, GL_N")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="classical-pieri",
                     description="Pieri rules, characters and tableau counts for classical groups.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("pieri", help="multiplicity of lam in mu (x) V[(r)]")
    p.add_argument("--group", required=True, choices=["sp", "o", "so"])
    _rank_flags(p)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("dual-pieri", help="multiplicity of lam in mu (x) wedge^r V")
    p.add_argument("--group", required=True, choices=["sp", "so"])
    _rank_flags(p)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("tensor", help="decompose S[mu] times a power of V")
    p.add_argument("--group", required=True, choices=["gl", "sp", "o", "so"])
    _rank_flags(p)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--kind", choices=pieri.TENSOR_KINDS, default="sym")
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("modify", help="apply the modification rule to s<lam> or s[lam]")
    p.add_argument("--group", required=True, choices=["sp", "o"])
    _rank_flags(p)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)

    p = sub.add_parser("character", help="irreducible character as a Laurent polynomial")
    p.add_argument("--group", required=True, choices=["gl", "sp", "so"])
    _rank_flags(p)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)

    for name, what in (("lr", "Littlewood-Richardson"), ("nl", "Newell-Littlewood")):
        p = sub.add_parser(name, help=f"{what} coefficient, or the full product without --lambda")
        p.add_argument("--mu", type=_partition, required=True)
        p.add_argument("--nu", type=_partition, required=True)
        p.add_argument("--lambda", dest="lam", type=_partition)

    p = sub.add_parser("count", help="tableau counts for the equinumeration identities")
    p.add_argument("--variant", required=True,
                   choices=[f"main{v}" for v in tableaux.MAIN2_VARIANTS]
                   + [f"burrill{v}" for v in tableaux.BURRILL_VARIANTS])
    _rank_flags(p)
    p.add_argument("--alpha", help="weight composition, e.g. [2,0,1] (main variants)")
    p.add_argument("--k", type=int, help="number of steps (burrill variants)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--side", choices=["a", "b", "both"], default="both")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(suites.SUITES) + ["all"])
    p.add_argument("--grid", action="append", default=[], metavar="KEY=VALUE",
                   help="override a grid parameter; VALUE is JSON (e.g. ranks=[1,2])")
    p.add_argument("--report", help="also write the JSON report to this path")
    return parser


# ------------------------------------------------------------------ commands

def _cmd_pieri(args) -> int:
    if args.group == "sp":
        g = _group("sp", args.n, args.N)
        ws = pieri.pieri_set(args.mu, args.lam, args.r)
        mult = pieri.sp_pieri_mult(args.mu, args.lam, args.r, g.rank)
    elif args.group == "o":
        g = _group("o", args.n, args.N)
        mult = pieri.o_pieri_mult(args.mu, args.lam, args.r, g.rank)
        ws = [xi for xi in pieri.pieri_set(args.mu, args.lam, args.r)
              if pieri.o_condition_iii(args.mu, xi, args.lam, g.rank)]
    else:
        g = _group("so", args.n, args.N)
        rule = pieri.so_odd_pieri_mult if g.family == "SOodd" else pieri.so_even_pieri_coeff
        mult = rule(args.mu, args.lam, args.r, g.rank)
        ws = None
    payload = {"group": str(g), "mu": format_partition(args.mu),
               "lambda": format_partition(args.lam), "r": args.r, "multiplicity": mult}
    if ws is not None:
        payload["witnesses"] = [format_partition(xi) for xi in ws]
    _emit(args, payload, str(mult))
    return 0


def _cmd_dual(args) -> int:
    g = _group(args.group, args.n, args.N)
    rule = {"Sp": pieri.sp_dual_pieri_mult, "SOodd": pieri.so_odd_dual_pieri_mult,
            "SOeven": pieri.so_even_dual_pieri_coeff}[g.family]
    mult = rule(args.mu, args.lam, args.r, g.rank)
    payload = {"group": str(g), "mu": format_partition(args.mu),
               "lambda": format_partition(args.lam), "r": args.r, "multiplicity": mult}
    _emit(args, payload, str(mult))
    return 0


def _render_elem(elem) -> str:
    if not len(elem):
        return "0"
    return "\n".join(f"{format_partition(lam)}: {c}" for lam, c in elem.items())


def _cmd_tensor(args) -> int:
    g = _group(args.group, args.n, args.N)
    elem = pieri.tensor_decomposition(g, args.mu, args.kind, args.r)
    payload = {"group": str(g), "mu": format_partition(args.mu), "kind": args.kind,
               "r": args.r, "decomposition": elem.to_json()}
    _emit(args, payload, _render_elem(elem))
    return 0


def _cmd_modify(args) -> int:
    g = _group(args.group, args.n, args.N)
    img = modify(g, args.lam)
    payload = {"group": str(g), "lambda": format_partition(args.lam), **img.to_json()}
    text = "0" if img.is_zero else f"sign {img.sign:+d}, label {format_partition(img.label)}"
    _emit(args, payload, text)
    return 0


def _cmd_character(args) -> int:
    g = _group(args.group, args.n, args.N)
    chi = irreducible_character(g, args.lam)
    payload = {"group": str(g), "lambda": format_partition(args.lam),
               "character": chi.render(), "dimension": chi.evaluate_at_ones()}
    _emit(args, payload, chi.render())
    return 0


def _cmd_coeff(args) -> int:
    single, bulk = ((lr_coefficient, lr_product) if args.command == "lr"
                    else (nl_coefficient, nl_product))
    base = {"mu": format_partition(args.mu), "nu": format_partition(args.nu)}
    if args.lam is not None:
        c = single(args.mu, args.nu, args.lam)
        _emit(args, {**base, "lambda": format_partition(args.lam), "coefficient": c}, str(c))
        return 0
    prod = bulk(args.mu, args.nu)
    terms = sorted(prod.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))
    payload = {**base, "product": {format_partition(lam): c for lam, c in terms}}
    _emit(args, payload, "\n".join(f"{format_partition(lam)}: {c}" for lam, c in terms) or "0")
    return 0


def _rank_for(variant: str, args) -> int:
    uses_N = variant in ("main3", "burrill2")
    rank = args.N if uses_N else args.n
    if rank is None:
        raise UsageError(f"{variant} needs {'--N' if uses_N else '--n'}")
    return rank


def _cmd_count(args) -> int:
    rank = _rank_for(args.variant, args)
    sides = ("a", "b") if args.side == "both" else (args.side,)
    if args.variant.startswith("main"):
        if args.alpha is None:
            raise UsageError("main variants need --alpha")
        try:
            alpha = json.loads(args.alpha)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed --alpha {args.alpha!r}") from exc
        if not isinstance(alpha, list) or not all(isinstance(a, int) for a in alpha):
            raise UsageError(f"malformed --alpha {args.alpha!r}")
        v = int(args.variant[4:])
        counts = {s: tableaux.main2_count(v, s, alpha, rank, args.m) for s in sides}
    else:
        if args.k is None:
            raise UsageError("burrill variants need --k")
        v = int(args.variant[7:])
        counts = {s: tableaux.burrill_count(v, s, args.k, rank, args.m) for s in sides}
    _emit(args, {"variant": args.variant, **counts},
          " ".join(f"{s}={c}" for s, c in counts.items()))
    return 0


def _parse_grid(items: List[str]) -> dict:
    grid = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"grid override must look like KEY=VALUE, got {item!r}")
        try:
            grid[key] = json.loads(value)
        except json.JSONDecodeError as exc:
            raise UsageError(f"grid value for {key} is not JSON: {value!r}") from exc
    return grid


def _cmd_verify(args) -> int:
    grid = _parse_grid(args.grid)
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if grid and len(names) > 1:
        raise UsageError("--grid applies to a single suite")
    reports = []
    for name in names:
        try:
            reports.append(suites.run_suite(name, **grid))
        except TypeError as exc:
            raise UsageError(f"bad grid for {name}: {exc}") from exc
    payload = {"passed": all(r.passed for r in reports),
               "suites": [r.to_json() for r in reports]}
    text = "\n".join(r.summary() for r in reports)
    for r in reports:
        for m in r.mismatches[:5]:
            text += "\n  " + json.dumps(m, sort_keys=True)
    _emit(args, payload, text)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0 if payload["passed"] else 2


_COMMANDS = {
    "pieri": _cmd_pieri,
    "dual-pieri": _cmd_dual,
    "tensor": _cmd_tensor,
    "modify": _cmd_modify,
    "character": _cmd_character,
    "lr": _cmd_coeff,
    "nl": _cmd_coeff,
    "count": _cmd_count,
    "verify": _cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        return _COMMANDS[args.command](args)
    except (UsageError, LabelError, ValueError) as exc:
        print(f"classical-pieri: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
