"""Command line: orbit tables, closure posets and the reference fixture report.

    korbits orbits --pair spr:2 --parabolic 1
    korbits poset --pair spr:2 --order full --dot
    korbits verify-paper

Simple roots are numbered 1..r in Bourbaki order.  For ``spr:n`` and
``sppq:p,q`` (type C_n) roots 1..n-1 are short and root n is long; for
``upq:p,q`` (type A_{p+q-1}) they are the usual adjacent transpositions;
for ``cgl:n`` roots 1..n-1 belong to the first GL(n) factor and n..2n-2 to
the second.  ``--parabolic`` lists the Levi roots, so the empty list is the
full flag variety.  For rank-two type C, ``alpha`` and ``beta`` name the
short and long root.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import verify
from .clans import ClanError, closure_orders_on_P, full_closure_order, project_to_P, weak_order
from .kernels import BACKEND
from .moment import DEFAULT_SEED, DEFAULT_TRIALS, GenericityError, ModelError, is_P_regular, phi_P
from .pairs import SP, Parabolic, PairError, SymmetricPair
from .springer import predicted_fiber_size

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_ROOT_NAMES = {"alpha": 1, "α": 1, "a": 1, "beta": 2, "β": 2, "b": 2}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitRecord:
    id: str
    clan: str
    dim: int
    phi: str
    isClosed: bool
    isRegular: bool
    predictedFiber: int
    geometricFiber: int


def parse_parabolic(pair: SymmetricPair, text: str | None) -> Parabolic:
    if text is None:
        return Parabolic.of(pair, ())
    body = text.strip()
    if body.startswith("levi="):
        body = body[len("levi="):]
    if body.upper() in ("", "B"):
        return Parabolic.of(pair, ())
    roots = []
    for tok in body.split(","):
        tok = tok.strip()
        if tok.lower() in _ROOT_NAMES:
            if pair.ambient != SP or pair.rank != 2:
                raise UsageError(f"root name {tok!r} is only defined for rank-two type C")
            roots.append(_ROOT_NAMES[tok.lower()])
        elif tok.isdigit():
            roots.append(int(tok))
        else:
            raise UsageError(f"bad simple root {tok!r}")
    return Parabolic.of(pair, roots)


def orbit_records(pair: SymmetricPair, P: Parabolic, seed: int, trials: int) -> list[OrbitRecord]:
    classes = project_to_P(pair, P)
    _, full = closure_orders_on_P(pair, P)
    bottom = set(full.minimal())
    phi = {k.rep: phi_P(pair, P, k.rep, seed, trials) for k in classes}
    counts: dict = {}
    for t in phi.values():
        counts[t] = counts.get(t, 0) + 1
    ordered = sorted(classes, key=lambda k: (k.dim(pair, P), k.rep))
    width = len(str(len(ordered) - 1))
    out = []
    for i, k in enumerate(ordered):
        t = phi[k.rep]
        out.append(
            OrbitRecord(
                id=f"O{i:0{width}d}",
                clan=k.rep,
                dim=k.dim(pair, P),
                phi=str(t),
                isClosed=k.rep in bottom,
                isRegular=is_P_regular(pair, P, k.rep, seed, trials),
                predictedFiber=predicted_fiber_size(pair, P, t),
                geometricFiber=counts[t],
            )
        )
    return out


def _table(records: list[OrbitRecord]) -> str:
    head = ["id", "clan", "dim", "phi", "closed", "regular", "predicted", "geometric"]
    rows = [
        [r.id, r.clan, str(r.dim), r.phi, "yes" if r.isClosed else "no", "yes" if r.isRegular else "no",
         str(r.predictedFiber), str(r.geometricFiber)]
        for r in records
    ]
    widths = [max(len(x) for x in col) for col in zip(head, *rows)]
    lines = ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in [head] + rows]
    return "\n".join(lines) + "\n"


def cmd_orbits(args, out) -> int:
    pair = _pair(args)
    P = parse_parabolic(pair, args.parabolic)
    records = orbit_records(pair, P, args.seed, args.trials)
    if args.json:
        for r in records:
            out.write(json.dumps(asdict(r), sort_keys=False) + "\n")
    else:
        out.write(_table(records))
    return EXIT_OK if all(r.predictedFiber == r.geometricFiber for r in records) else EXIT_FAIL


def cmd_poset(args, out) -> int:
    pair = _pair(args)
    P = parse_parabolic(pair, args.parabolic)
    if P.levi:
        weak, full = closure_orders_on_P(pair, P)
        poset = weak if args.order == "weak" else full
    else:
        poset = weak_order(pair).transitive_reduction() if args.order == "weak" else full_closure_order(pair)
    if args.json:
        out.write(json.dumps(poset.to_json(), indent=2) + "\n")
    else:
        out.write(poset.to_dot(f"{pair} {P} {args.order}"))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    outcomes = verify.run(verify.Context(args.seed, args.trials))
    if args.json:
        out.write(json.dumps([asdict(o) for o in outcomes], indent=2) + "\n")
    else:
        out.write(verify.report(outcomes))
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_FAIL


def _pair(args) -> SymmetricPair:
    text = args.pair or args.pair_pos
    if not text:
        raise UsageError("a pair is required, e.g. --pair spr:2")
    return SymmetricPair.parse(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="sampling trials")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    with_pair = argparse.ArgumentParser(add_help=False)
    with_pair.add_argument("pair_pos", nargs="?", metavar="PAIR", help="pair descriptor, e.g. upq:2,1")
    with_pair.add_argument("--pair", help="pair descriptor: cgl:n, upq:p,q, spr:n or sppq:p,q")
    with_pair.add_argument("--parabolic", help="comma list of Levi simple roots (default: full flag)")

    parser = argparse.ArgumentParser(prog="korbits", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"korbits (kernels: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("orbits", parents=[common, with_pair], help="table of K-orbits on a flag variety")
    p.set_defaults(func=cmd_orbits)
    p = sub.add_parser("poset", parents=[common, with_pair], help="closure order as DOT (or JSON)")
    p.add_argument("--order", choices=("weak", "full"), default="full")
    p.add_argument("--dot", action="store_true", help="DOT output (the default)")
    p.set_defaults(func=cmd_poset)
    p = sub.add_parser("verify-paper", parents=[common], help="run the reference fixtures and cross-checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, PairError) as exc:
        print(f"korbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ClanError, GenericityError, ModelError) as exc:
        print(f"korbits: verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
