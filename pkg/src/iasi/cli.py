"""Command-line front end.

Subcommands: verify, construct, nourish, ops, oracle.  Every run prints a
report whose `outcome` block is stable, machine-parseable text (sorted
keys, no timestamps); wall-clock timing is printed outside that block so
golden-file comparisons stay byte-exact.

Exit codes are a contract:
  0  success / requested property holds
  1  property fails (or an oracle sweep found a falsifying instance)
  2  input error: unparseable file, bad arity, name collision, oracle limit
  3  internal invariant breach (self-verification failed; never expected)
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import construct as constructmod
from . import graph as graphmod
from . import labeling as labelingmod
from . import oracle as oraclemod
from .errors import InternalCheckError, ParseError
from .graph import Graph, clique_number, max_clique, read_graph, write_graph
from .labeling import read_labeling, write_labeling

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL = 3

OPS_ARITY = {
    "union": 2,
    "join": 2,
    "complement": 1,
    "product": 2,
    "corona": 2,
    "intersection": 2,
}


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _load_graph(path: str) -> tuple[Graph, dict]:
    p = Path(path)
    if not p.exists():
        raise ParseError(f"no such file: {path}")
    return read_graph(p.read_text(encoding="utf-8")), {"path": path, "sha256": _digest(p)}


def _load_labeling(path: str) -> tuple[labelingmod.Labeling, dict]:
    p = Path(path)
    if not p.exists():
        raise ParseError(f"no such file: {path}")
    return read_labeling(p.read_text(encoding="utf-8")), {"path": path, "sha256": _digest(p)}


def _emit(command: str, inputs: list[dict], outcome: dict, fmt: str, started: float) -> None:
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if fmt == "json":
        doc = {"command": command, "inputs": inputs, "outcome": outcome}
        print(json.dumps(doc, indent=2, sort_keys=True))
        print(f'{{"timing_ms": {elapsed_ms:.1f}}}')
    else:
        print(f"command: {command}")
        for item in inputs:
            print(f"input: {item['path']} sha256={item['sha256']}")
        print("outcome:")
        print(json.dumps(outcome, indent=2, sort_keys=True))
        print(f"timing: {elapsed_ms:.1f} ms")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    started = time.perf_counter()
    g, gin = _load_graph(args.graph)
    f, fin = _load_labeling(args.labeling)

    if args.concurrent:
        prop = "concurrent-strong"
        holds = labelingmod.verify_concurrent_strong(g, f)
        outcome = {
            "property": prop,
            "holds": holds,
            "report": labelingmod.verify(g, f).to_dict(),
            "complement_report": labelingmod.verify(graphmod.complement(g), f).to_dict(),
        }
    else:
        report = labelingmod.verify(g, f)
        prop = "strong" if args.strong else "iasi"
        holds = report.is_strong if args.strong else report.is_iasi
        outcome = {"property": prop, "holds": holds, "report": report.to_dict()}

    if args.output:
        Path(args.output).write_text(
            json.dumps(outcome, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    _emit("verify", [gin, fin], outcome, args.format, started)
    return EXIT_OK if holds else EXIT_PROPERTY_FAILED


def _read_cards_file(path: str) -> dict[str, int]:
    p = Path(path)
    if not p.exists():
        raise ParseError(f"no such file: {path}")
    cards: dict[str, int] = {}
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, rest = line.partition(":")
        if not sep or not rest.strip().isdigit():
            raise ParseError("expected 'name: <cardinality>'", line=lineno)
        cards[name.strip()] = int(rest.strip())
    return cards


def _cmd_construct(args) -> int:
    started = time.perf_counter()
    g, gin = _load_graph(args.graph)
    cards: int | dict[str, int]
    if args.cards:
        cards = _read_cards_file(args.cards)
    else:
        cards = args.cardinality
    spec = constructmod.ConstructionSpec(cardinalities=cards, seed=args.seed, mode=args.mode)
    labeling, trace = constructmod.construct_strong_traced(g, spec)

    text = write_labeling(labeling)
    outcome = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "mode": spec.mode,
        "seed": spec.seed,
        "color_classes": len(trace["classes"]),
        "strides": trace["strides"],
        "max_label_element": trace["max_label_element"],
        "self_verified": True,
        "labeling_file": args.output,
        "trace": trace,
    }
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        outcome["labeling_text"] = text
    if args.trace:
        Path(args.trace).write_text(
            json.dumps(trace, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    _emit("construct", [gin], outcome, args.format, started)
    return EXIT_OK


def _cmd_nourish(args) -> int:
    started = time.perf_counter()
    g, gin = _load_graph(args.graph)
    if not g.vertices:
        raise ParseError("graph is empty; nourishing number undefined")
    kappa = labelingmod.nourishing_number(g)
    outcome = {
        "nourishing_number": kappa,
        "clique_number": kappa,
        "max_clique": list(max_clique(g)),
    }
    _emit("nourish", [gin], outcome, args.format, started)
    return EXIT_OK


def _predict_kappa(op: str, graphs: list[Graph], kappas: list[int | None]) -> tuple[int | None, str, list[str]]:
    notes: list[str] = []
    if op == "join":
        return kappas[0] + kappas[1], "exact", notes
    if op == "product":
        return max(kappas[0], kappas[1]), "exact", notes
    if op == "corona":
        if kappas[0] == kappas[1]:
            notes.append(
                "equal operand values fall outside the two-branch piecewise formula; "
                "using max(k1, k2+1)"
            )
        return max(kappas[0], kappas[1] + 1), "exact", notes
    if op == "union":
        if graphs[0].vertices & graphs[1].vertices:
            return max(kappas[0], kappas[1]), "lower-bound", notes
        return max(kappas[0], kappas[1]), "exact", notes
    return None, "none", notes


def _cmd_ops(args) -> int:
    started = time.perf_counter()
    op = args.op
    if len(args.graphs) != OPS_ARITY[op]:
        raise ParseError(f"{op} takes {OPS_ARITY[op]} graph file(s), got {len(args.graphs)}")
    loaded = [_load_graph(p) for p in args.graphs]
    graphs = [g for g, _ in loaded]
    inputs = [meta for _, meta in loaded]

    if op == "union":
        result = graphmod.union(*graphs)
    elif op == "join":
        result = graphmod.join(*graphs)
    elif op == "complement":
        result = graphmod.complement(graphs[0])
    elif op == "product":
        result = graphmod.cartesian_product(*graphs)
    elif op == "corona":
        result = graphmod.corona(*graphs)
    else:
        result = graphmod.intersection(*graphs)

    kappas = [clique_number(g) if g.vertices else None for g in graphs]
    kappa_result = clique_number(result) if result.vertices else None
    predicted, kind, notes = (None, "none", [])
    if op in ("join", "product", "corona", "union") and all(k is not None for k in kappas):
        predicted, kind, notes = _predict_kappa(op, graphs, kappas)

    agrees: bool | None = None
    if predicted is not None and kappa_result is not None:
        agrees = kappa_result >= predicted if kind == "lower-bound" else kappa_result == predicted

    p = [len(g.vertices) for g in graphs]
    q = [len(g.edges) for g in graphs]
    edge_check: bool | None = None
    if op == "product":
        edge_check = len(result.edges) == p[0] * q[1] + p[1] * q[0]
    elif op == "corona":
        edge_check = len(result.edges) == q[0] + p[0] * q[1] + p[0] * p[1]

    outcome = {
        "op": op,
        "vertices": len(result.vertices),
        "edges": len(result.edges),
        "kappa_inputs": kappas,
        "kappa_computed": kappa_result,
        "kappa_predicted": predicted,
        "prediction_kind": kind,
        "kappa_agrees": agrees,
        "edge_count_formula_holds": edge_check,
        "notes": notes,
    }
    if args.output:
        Path(args.output).write_text(write_graph(result), encoding="utf-8")
    else:
        outcome["graph_text"] = write_graph(result)
    _emit("ops", inputs, outcome, args.format, started)
    failed = (agrees is False) or (edge_check is False)
    return EXIT_PROPERTY_FAILED if failed else EXIT_OK


def _cmd_oracle(args) -> int:
    started = time.perf_counter()
    if args.oracle_cmd == "lemma":
        check = oraclemod.lemma_oracle(args.max)
        outcome = {"check": "lemma", **check.to_dict()}
        outcome["verdict"] = (
            "agrees on all pairs" if check.ok else "DISAGREEMENT FOUND"
        )
        _emit("oracle", [], outcome, args.format, started)
        return EXIT_OK if check.ok else EXIT_PROPERTY_FAILED

    g, gin = _load_graph(args.graph)
    cfg = oraclemod.OracleConfig(
        universe_max=args.max,
        min_card=args.cards,
        max_card=args.cards,
        vertex_limit=args.vertex_limit,
    )
    if args.oracle_cmd == "minchain":
        result = oraclemod.min_max_chain(g, cfg)
        omega = clique_number(g)
        outcome = {
            "check": "minchain",
            **result.to_dict(),
            "clique_number": omega,
            "agree": None if result.exhausted else result.value == omega,
        }
        if outcome["agree"] is False and args.bundle_dir:
            oraclemod.write_bundle(args.bundle_dir, "minchain-disagreement", g, result.witness, outcome)
        _emit("oracle", [gin], outcome, args.format, started)
        if outcome["agree"] is False:
            return EXIT_PROPERTY_FAILED
        return EXIT_OK

    result = oraclemod.exists_concurrent(g, cfg)
    outcome = {"check": "concurrent", **result.to_dict()}
    _emit("oracle", [gin], outcome, args.format, started)
    return EXIT_OK if result.all_witnesses_pairwise_disjoint else EXIT_PROPERTY_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iasi",
        description="Strong integer additive set-indexers: verify, construct, analyze.",
        epilog=f"Oracle sweeps checkpoint into ${oraclemod.CHECKPOINT_ENV} when set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="also write the primary artifact/report here")

    p = sub.add_parser("verify", help="check a labeling against a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.add_argument("--strong", action="store_true", help="require the strong condition")
    p.add_argument("--concurrent", action="store_true", help="require strength on graph and complement")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="build a strong labeling")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--cardinality", type=int, default=2, help="uniform label size")
    group.add_argument("--cards", help="file of per-vertex 'name: size' lines")
    p.add_argument("--mode", choices=constructmod.MODES, default="coloring")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", help="write the JSON construction trace here")
    common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("nourish", help="nourishing number with a clique witness")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=_cmd_nourish)

    p = sub.add_parser("ops", help="apply a graph operation and report invariants")
    p.add_argument("op", choices=sorted(OPS_ARITY))
    p.add_argument("graphs", nargs="+")
    common(p)
    p.set_defaults(func=_cmd_ops)

    p = sub.add_parser("oracle", help="exhaustive small-instance checks")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)

    q = osub.add_parser("lemma", help="sumset-cardinality vs difference-disjointness sweep")
    q.add_argument("--max", type=int, default=6, help="universe maximum")
    common(q)
    q.set_defaults(func=_cmd_oracle)

    q = osub.add_parser("minchain", help="definitional nourishing number by enumeration")
    q.add_argument("graph")
    q.add_argument("--cards", type=int, default=2)
    q.add_argument("--max", type=int, default=6)
    q.add_argument("--vertex-limit", type=int, default=5)
    q.add_argument("--bundle-dir", help="emit a counterexample bundle here on disagreement")
    common(q)
    q.set_defaults(func=_cmd_oracle)

    q = osub.add_parser("concurrent", help="search for a labeling strong on graph and complement")
    q.add_argument("graph")
    q.add_argument("--cards", type=int, default=2)
    q.add_argument("--max", type=int, default=6)
    q.add_argument("--vertex-limit", type=int, default=5)
    common(q)
    q.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
