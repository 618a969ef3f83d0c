"""Command-line front end.

Every command builds one output document (``schema_version``, ``command``,
``inputs``, ``results``, ``units``, ``warnings``) and prints it as JSON
(default), CSV or text. Exit codes: 0 success, 2 validation, 3 I/O.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from typing import Iterable, List, Optional

from . import exchange, oracle, published
from .errors import CapExceededError, ValidationError
from .merge import merge_report
from .thermo import Network, report
from .transfer import (
    TransferQuote,
    max_profit_classical,
    max_profit_exact,
    per_link_entropy,
    quote,
    transfer_entropy_change,
)

SCHEMA_VERSION = "1.0"
SIG_DIGITS = 12
EXIT_OK, EXIT_VALIDATION, EXIT_IO = 0, 2, 3

ENTROPY_KEYS = frozenset(
    {
        "log_microstates",
        "entropy_planck",
        "entropy_large",
        "entropy_change_planck",
        "entropy_change_exact",
        "per_link_entropy_hot",
        "per_link_entropy_cold",
        "entropy_change_no_profit",
        "log_multiplicity",
        "total_log_multiplicity",
    }
)


class IOFailure(Exception):
    pass


def schema_path() -> str:
    return os.path.join(os.path.dirname(__file__), "schema", "output.schema.json")


def load_schema() -> dict:
    with open(schema_path(), encoding="utf-8") as fh:
        return json.load(fh)


# -- serialization ---------------------------------------------------------


def _round(value):
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(f"{value:.{SIG_DIGITS}g}")
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    return value


def _to_bits(value, key=None):
    if isinstance(value, dict):
        return {k: _to_bits(v, k) for k, v in value.items()}
    if key in ENTROPY_KEYS:
        if isinstance(value, (list, tuple)):
            return [v / math.log(2) for v in value]
        if isinstance(value, float):
            return value / math.log(2)
    return value


def document(command, inputs, results, units="nats", warnings=()):
    if units == "bits":
        results = _to_bits(results)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": _round(results),
        "units": units,
        "warnings": list(warnings),
    }


def _flatten(value, prefix=""):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(value, list):
        for i, v in enumerate(value):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, value


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for key in ("schema_version", "command", "units"):
            w.writerow([key, doc[key]])
        for k, v in _flatten(doc["inputs"], "inputs"):
            w.writerow([k, _cell(v)])
        for k, v in _flatten(doc["results"], "results"):
            w.writerow([k, _cell(v)])
        for i, msg in enumerate(doc["warnings"]):
            w.writerow([f"warnings.{i}", msg])
        return buf.getvalue().rstrip("\n")
    lines = [f"# {doc['command']} (schema {doc['schema_version']}, {doc['units']})"]
    lines += [f"{k}: {_cell(v)}" for k, v in _flatten(doc["inputs"], "inputs")]
    lines += [f"{k}: {_cell(v)}" for k, v in _flatten(doc["results"])]
    lines += [f"warning: {msg}" for msg in doc["warnings"]]
    return "\n".join(lines)


def write_atomic(path: str, rows: Iterable, header: List[str]) -> None:
    """Write CSV rows to ``path`` via a temp file renamed into place."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".netthermo-", suffix=".csv", dir=directory)
    try:
        with os.fdopen(fd, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- commands --------------------------------------------------------------


def cmd_analyze(args) -> List[dict]:
    net = Network(nodes=args.nodes, links=args.links)
    warnings = []
    if args.show_paper_ledger:
        warnings += [c.describe() for c in published.entropy_comparisons(net)]
        if not warnings:
            warnings.append("no published reference values for these inputs")
    inputs = {"nodes": args.nodes, "links": args.links}
    return [document("analyze", inputs, report(net).to_dict(), args.units, warnings)]


def cmd_merge(args) -> List[dict]:
    a = Network(nodes=args.nodes1, links=args.links1)
    b = Network(nodes=args.nodes2, links=args.links2)
    warnings = []
    if args.show_paper_ledger:
        warnings += [c.describe() for c in published.merge_comparisons(a, b)]
        if not warnings:
            warnings.append("no published reference values for these inputs")
    inputs = {
        "nodes1": args.nodes1,
        "links1": args.links1,
        "nodes2": args.nodes2,
        "links2": args.links2,
    }
    return [document("merge", inputs, merge_report(a, b).to_dict(), args.units, warnings)]


def cmd_carnot(args) -> List[dict]:
    warnings = []
    nets = (args.nodes_hot, args.links_hot, args.nodes_cold, args.links_cold)
    if any(v is not None for v in nets):
        if any(v is None for v in nets) or args.n_hot is not None or args.n_cold is not None:
            raise ValidationError(
                "give either --n-hot/--n-cold or all of "
                "--nodes-hot/--links-hot/--nodes-cold/--links-cold"
            )
        hot = Network(nodes=args.nodes_hot, links=args.links_hot)
        cold = Network(nodes=args.nodes_cold, links=args.links_cold)
        q = quote(args.q, hot, cold)
        if q.reversed:
            warnings.append("the network given as hot is colder; roles swapped")
        inputs = {
            "q": args.q,
            "nodes_hot": args.nodes_hot,
            "links_hot": args.links_hot,
            "nodes_cold": args.nodes_cold,
            "links_cold": args.links_cold,
        }
    else:
        if args.n_hot is None or args.n_cold is None:
            raise ValidationError("--n-hot and --n-cold are required")
        q = TransferQuote(
            quanta_moved=args.q,
            hot_occupation=args.n_hot,
            cold_occupation=args.n_cold,
            per_link_entropy_hot=per_link_entropy(args.n_hot),
            per_link_entropy_cold=per_link_entropy(args.n_cold),
            max_profit_exact=max_profit_exact(args.q, args.n_hot, args.n_cold),
            max_profit_classical=max_profit_classical(args.q, args.n_hot, args.n_cold),
            entropy_change_no_profit=transfer_entropy_change(
                args.q, 0.0, args.n_hot, args.n_cold
            ),
        )
        inputs = {"q": args.q, "n_hot": args.n_hot, "n_cold": args.n_cold}
    if q.max_profit_exact < 0:
        warnings.append("direction reversed: work required")
    return [document("carnot", inputs, q.to_dict(), args.units, warnings)]


def cmd_equilibrium(args) -> List[dict]:
    try:
        dist = oracle.partition_distribution(args.k1, args.k2, args.r)
    except CapExceededError as exc:
        raise CapExceededError(f"{exc}; for larger systems use `simulate`") from None
    results = dist.to_dict()
    results["equalization_error"] = (
        abs(dist.argmax_links_left / args.r - args.k1 / (args.k1 + args.k2))
        if args.r
        else None
    )
    inputs = {"k1": args.k1, "k2": args.k2, "r": args.r}
    return [document("equilibrium", inputs, results, args.units)]


def cmd_simulate(args) -> List[dict]:
    config = exchange.SimConfig(
        pool_states_left=args.k1,
        pool_states_right=args.k2,
        total_links=args.r,
        steps=args.steps,
        seed=args.seed,
        initial_links_left=args.initial_left,
        burn_in=args.burn_in,
        sample_stride=args.stride,
    )
    traj = exchange.run_exchange(config)
    summary = exchange.summarize(traj, args.k1, args.k2)
    warnings = []
    if summary.tv_distance_to_exact is None:
        warnings.append("exact oracle beyond cap; tv_distance_to_exact omitted")
    if args.out_csv:
        try:
            write_atomic(
                args.out_csv,
                zip(traj.steps_index.tolist(), traj.samples.tolist()),
                ["step_index", "links_left"],
            )
        except OSError as exc:
            raise IOFailure(f"cannot write {args.out_csv}: {exc}") from exc
    results = {
        "mean_links_left": summary.mean_links_left,
        "stderr_links_left": summary.stderr_links_left,
        "mean_occupation_left": summary.mean_occupation_left,
        "mean_occupation_right": summary.mean_occupation_right,
        "tv_distance_to_exact": summary.tv_distance_to_exact,
        "acceptance_rate": traj.acceptance_rate,
        "retained_samples": int(len(traj.samples)),
        "empirical_histogram": {str(k): v for k, v in traj.empirical_histogram.items()},
        "rng": traj.rng,
        "kernel": traj.kernel,
    }
    inputs = {
        "k1": args.k1,
        "k2": args.k2,
        "r": args.r,
        "steps": args.steps,
        "seed": args.seed,
        "burn_in": config.burn_in,
        "stride": args.stride,
        "initial_left": args.initial_left,
    }
    return [document("simulate", inputs, results, args.units, warnings)]


def _read_inventory(path: str):
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from exc
    numbered = [
        (lineno, line)
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise ValidationError(f"{path}: missing header `name,nodes,links`")
    header_line, header = numbered[0]
    if [h.strip() for h in next(csv.reader([header]))] != ["name", "nodes", "links"]:
        raise ValidationError(
            f"{path} line {header_line}: header must be `name,nodes,links`"
        )
    for lineno, line in numbered[1:]:
        yield lineno, next(csv.reader([line]))


def _parse_row(fields):
    if len(fields) != 3:
        raise ValidationError(f"expected 3 fields, got {len(fields)}")
    name, nodes, links = (f.strip() for f in fields)
    try:
        nodes_i, links_i = int(nodes), int(links)
    except ValueError:
        raise ValidationError(f"nodes and links must be integers: {nodes!r}, {links!r}") from None
    return name, Network(nodes=nodes_i, links=links_i)


def cmd_batch(args) -> List[dict]:
    docs, skipped = [], []
    rows = list(_read_inventory(args.input_csv))
    for lineno, fields in rows:
        try:
            name, net = _parse_row(fields)
        except ValidationError as exc:
            if args.strict:
                raise ValidationError(f"row {lineno}: {exc}") from None
            skipped.append({"row": lineno, "error": str(exc)})
            continue
        inputs = {"name": name, "row": lineno, "nodes": net.nodes, "links": net.links}
        docs.append(document("analyze", inputs, report(net).to_dict(), args.units))
    warnings = [f"row {s['row']} skipped: {s['error']}" for s in skipped]
    summary = document(
        "batch",
        {"input_csv": args.input_csv, "strict": args.strict},
        {"count": len(rows), "processed": len(docs), "skipped": skipped},
        args.units,
        warnings,
    )
    return docs + [summary]


# -- parser ----------------------------------------------------------------


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "csv", "text"), default=d("json"))
    parser.add_argument("--units", choices=("nats", "bits"), default=d("nats"))
    parser.add_argument(
        "--show-paper-ledger",
        action="store_true",
        default=d(False),
        help="list published reference values beside recomputed ones",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netthermo",
        description="Thermodynamics of communication networks as boson gases.",
    )
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report for one network")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--links", type=int, required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("merge", help="combine two networks")
    for i in (1, 2):
        p.add_argument(f"--nodes{i}", type=int, required=True)
        p.add_argument(f"--links{i}", type=int, required=True)
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("carnot", help="Carnot bounds for a hot-to-cold transfer")
    p.add_argument("--q", type=float, required=True, help="quanta moved")
    p.add_argument("--n-hot", type=float)
    p.add_argument("--n-cold", type=float)
    p.add_argument("--nodes-hot", type=int)
    p.add_argument("--links-hot", type=int)
    p.add_argument("--nodes-cold", type=int)
    p.add_argument("--links-cold", type=int)
    p.set_defaults(func=cmd_carnot)

    p = sub.add_parser("equilibrium", help="exact split distribution of links")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_equilibrium)

    p = sub.add_parser("simulate", help="Monte Carlo link exchange between two pools")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burn-in", type=int, default=None, help="default: 1%% of steps")
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--initial-left", type=int, default=0)
    p.add_argument("--out-csv", metavar="PATH")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("batch", help="analyze every network in a CSV inventory")
    p.add_argument("input_csv")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_batch)

    for sp in sub.choices.values():
        _common(sp, suppress=True)
    return parser


def emit(docs: List[dict], fmt: str, out, stream: bool = False) -> None:
    if fmt == "json" and stream:
        for doc in docs:  # JSON Lines for streams
            out.write(json.dumps(doc) + "\n")
        return
    out.write("\n\n".join(render(d, fmt) for d in docs) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        docs = args.func(args)
    except IOFailure as exc:
        print(f"netthermo {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValidationError as exc:
        print(f"netthermo {args.command}: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    emit(docs, args.format, sys.stdout, stream=args.command == "batch")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
