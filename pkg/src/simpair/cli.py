"""Command-line interface.

Exit codes: 0 the queried property holds (or the command succeeded),
1 it does not hold, 2 malformed input, 3 decision procedure and oracle
disagree, 4 a search-space cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import construct, decide, oracle, shapes, wpo
from .core import (
    FinPair,
    parse_pair,
    parse_witness,
    serialize_pair,
    serialize_witness,
)
from .errors import CapExceeded, SimpairError

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3
EXIT_CAP = 4

_RELATIONS = {
    "red": (decide.decide_reduction, oracle.brute_reduction),
    "emb": (decide.decide_embedding, oracle.brute_embedding),
    "iso": (decide.decide_isomorphism, oracle.brute_isomorphism),
}


def _read_pair(path: str) -> FinPair:
    return parse_pair(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _oracle_cap(args) -> int | None:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("SIMPAIR_CAP")
    return int(env) if env else None


def _brute(fn, p1, p2, cap):
    return fn(p1, p2, cap) if cap is not None else fn(p1, p2)


def _cmd_invariants(args) -> int:
    pair = _read_pair(args.pair)
    classes = [
        {
            "elements": list(pair.F.blocks[c]),
            "fine": str(shapes.local_fine_shape(pair, c)),
            "coarse": str(shapes.local_coarse_shape(pair, c)),
        }
        for c in range(pair.F.num_classes)
    ]
    gfs = shapes.global_fine_shape(pair)
    gfs_doc = {str(s): c.value for s, c in sorted(gfs.items(), key=lambda kv: str(kv[0]))}
    doc = {
        "n": pair.n,
        "fine_shape_E": str(shapes.fine_shape(pair.E)),
        "coarse_shape_E": str(shapes.coarse_shape(pair.E)),
        "fine_shape_F": str(shapes.fine_shape(pair.F)),
        "coarse_shape_F": str(shapes.coarse_shape(pair.F)),
        "relative_shape": str(shapes.coarse_relative_shape(pair)),
        "classes": classes,
        "global_fine_shape": gfs_doc,
    }
    if args.json:
        print(json.dumps(doc, separators=(",", ":")))
        return EXIT_HOLDS
    print(f"n={pair.n} fine-classes={pair.E.num_classes} coarse-classes={pair.F.num_classes}")
    for key in ("fine_shape_E", "coarse_shape_E", "fine_shape_F", "coarse_shape_F", "relative_shape"):
        print(f"{key.replace('_', ' ')}: {doc[key]}")
    for c, info in enumerate(classes):
        members = ",".join(str(x) for x in info["elements"])
        print(f"class {c} {{{members}}}: fine={info['fine']} coarse={info['coarse']}")
    print("global fine shape: " + " ".join(f"{k}:{v}" for k, v in gfs_doc.items()))
    return EXIT_HOLDS


def _cmd_decide(args) -> int:
    decider, brute = _RELATIONS[args.relation]
    p1, p2 = _read_pair(args.source), _read_pair(args.target)
    decision = decider(p1, p2)

    oracle_decision = None
    if args.oracle:
        oracle_decision = _brute(brute, p1, p2, _oracle_cap(args))
        if oracle_decision.answer != decision.answer:
            print(
                f"DISAGREE: decision={decision.answer} oracle={oracle_decision.answer}",
                file=sys.stderr,
            )
            return EXIT_DISAGREE

    if decision.witness is not None:
        check = decide.verify_witness(p1, p2, decision.witness)
        if not check.ok:
            print("DISAGREE: produced witness fails verification", file=sys.stderr)
            for v in check.violations:
                print(v, file=sys.stderr)
            return EXIT_DISAGREE
        if args.witness:
            Path(args.witness).write_text(
                serialize_witness(decision.witness) + "\n", encoding="utf-8"
            )

    if args.json:
        doc = {
            "relation": args.relation,
            "answer": decision.answer,
            "witness": list(decision.witness.map) if decision.witness else None,
        }
        if oracle_decision is not None:
            doc["oracle"] = oracle_decision.answer
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print("holds" if decision.answer else "does not hold")
        if decision.witness is not None:
            print("witness: " + serialize_witness(decision.witness))
    return EXIT_HOLDS if decision.answer else EXIT_FAILS


def _cmd_verify(args) -> int:
    p1, p2 = _read_pair(args.source), _read_pair(args.target)
    w = parse_witness(Path(args.witness).read_text(encoding="utf-8"))
    result = decide.verify_witness(p1, p2, w)
    if args.json:
        print(
            json.dumps(
                {"ok": result.ok, "violations": list(result.violations)},
                separators=(",", ":"),
            )
        )
    else:
        print("ok" if result.ok else "FAILED")
        for v in result.violations:
            print(v)
    return EXIT_HOLDS if result.ok else EXIT_FAILS


def _cmd_gen(args) -> int:
    if args.kind == "shape":
        pair = construct.build_shape_pair(
            [shapes.parse_shape_literal(lit) for lit in args.shapes]
        )
    elif args.kind == "orbit":
        sub = [construct.parse_cycles(text, args.n) for text in args.generators]
        full = sub + [construct.parse_cycles(text, args.n) for text in args.full or []]
        pair = construct.orbit_pair(args.n, sub, full)
    else:
        pair = construct.random_pair(args.seed, args.n, args.profile)
    _emit(serialize_pair(pair), args.output)
    return EXIT_HOLDS


def _crosscheck_universe(nmax: int) -> list[FinPair]:
    pairs: list[FinPair] = []
    for n in range(nmax + 1):
        pairs.extend(oracle.enumerate_pairs(n))
    return pairs


def _cmd_crosscheck(args) -> int:
    cap = _oracle_cap(args)
    universe = _crosscheck_universe(args.nmax)
    instances = [(p1, p2) for p1 in universe for p2 in universe]
    rng_sizes = [args.nmax + 1, args.nmax + 2]
    for i in range(args.count):
        n1 = rng_sizes[i % 2]
        n2 = rng_sizes[(i // 2) % 2]
        instances.append(
            (
                construct.random_pair(args.seed + 2 * i, n1),
                construct.random_pair(args.seed + 2 * i + 1, n2),
            )
        )

    agreed = {name: 0 for name in _RELATIONS}
    for p1, p2 in instances:
        for name, (decider, brute) in _RELATIONS.items():
            decision = decider(p1, p2)
            truth = _brute(brute, p1, p2, cap)
            if decision.answer != truth.answer:
                src = Path(f"simpair-disagree-{name}-src.json")
                tgt = Path(f"simpair-disagree-{name}-tgt.json")
                src.write_text(serialize_pair(p1) + "\n", encoding="utf-8")
                tgt.write_text(serialize_pair(p2) + "\n", encoding="utf-8")
                print(
                    f"DISAGREE on {name}: decision={decision.answer} "
                    f"oracle={truth.answer}; wrote {src} and {tgt}",
                    file=sys.stderr,
                )
                return EXIT_DISAGREE
            agreed[name] += 1

    doc = {
        "exhaustive_pairs": len(universe),
        "instances": len(instances),
        "agreed": agreed,
    }
    if args.json:
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(f"universe: {len(universe)} pairs up to size {args.nmax}")
        print(f"instances checked: {len(instances)} ordered pairs")
        for name, k in agreed.items():
            print(f"{name}: {k} agreed")
        print("result: OK")
    return EXIT_HOLDS


def _cmd_shape(args) -> int:
    if args.op == "parse":
        print(str(shapes.parse_shape_literal(args.shape)))
        return EXIT_HOLDS
    if args.op == "leq":
        a = shapes.parse_shape_literal(args.shape)
        b = shapes.parse_shape_literal(args.other)
        holds = shapes.shape_leq(a, b)
    elif args.op == "sc":
        holds = shapes.is_coarse_shape(shapes.parse_shape_literal(args.shape))
    else:  # minsize
        size = shapes.min_class_size(shapes.parse_shape_literal(args.shape))
        print(str(size.value) if size.is_finite else "inf")
        return EXIT_HOLDS
    print("true" if holds else "false")
    return EXIT_HOLDS if holds else EXIT_FAILS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simpair",
        description="Decide simultaneous reducibility, embeddability, and "
        "isomorphism for nested pairs of finite equivalence relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print the shape invariants of a pair")
    p.add_argument("pair", help="pair JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_invariants)

    p = sub.add_parser("decide", help="decide a relation between two pairs")
    p.add_argument("relation", choices=sorted(_RELATIONS))
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--witness", metavar="FILE", help="write the witness map here")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.add_argument("--cap", type=int, help="override the oracle search cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_decide)

    p = sub.add_parser("verify", help="check a witness file against two pairs")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("witness")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("gen", help="generate a pair file")
    gen_sub = p.add_subparsers(dest="kind", required=True)

    g = gen_sub.add_parser("shape", help="realize local fine shapes canonically")
    g.add_argument("shapes", nargs="+", metavar="SHAPE", help="shape literals")
    g.add_argument("-o", "--output", metavar="FILE")
    g.set_defaults(run=_cmd_gen)

    g = gen_sub.add_parser("orbit", help="orbit pair of nested permutation groups")
    g.add_argument("n", type=int)
    g.add_argument("generators", nargs="*", metavar="CYCLES", help="fine generators")
    g.add_argument("--full", nargs="+", metavar="CYCLES", help="extra coarse generators")
    g.add_argument("-o", "--output", metavar="FILE")
    g.set_defaults(run=_cmd_gen)

    g = gen_sub.add_parser("random", help="seeded random pair")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--profile", choices=construct.PROFILES, default=construct.UNIFORM_REFINEMENT)
    g.add_argument("-o", "--output", metavar="FILE")
    g.set_defaults(run=_cmd_gen)

    p = sub.add_parser("crosscheck", help="sweep deciders against brute force")
    p.add_argument("--nmax", type=int, default=3, help="exhaustive up to this size")
    p.add_argument("--count", type=int, default=0, help="extra random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, help="override the oracle search cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_crosscheck)

    p = sub.add_parser("shape", help="shape literal utilities")
    shape_sub = p.add_subparsers(dest="op", required=True)
    s = shape_sub.add_parser("parse", help="echo the canonical form")
    s.add_argument("shape")
    s.set_defaults(run=_cmd_shape)
    s = shape_sub.add_parser("leq", help="pointwise comparison")
    s.add_argument("shape")
    s.add_argument("other")
    s.set_defaults(run=_cmd_shape)
    s = shape_sub.add_parser("sc", help="is it a realizable coarse shape?")
    s.add_argument("shape")
    s.set_defaults(run=_cmd_shape)
    s = shape_sub.add_parser("minsize", help="points needed by a realizing class")
    s.add_argument("shape")
    s.set_defaults(run=_cmd_shape)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SimpairError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
