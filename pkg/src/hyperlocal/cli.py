"""Command line entry point.

Every run writes line-delimited JSON records to stdout and a short summary
table to stderr.  Exit status: 0 on success, 1 on bad input, 2 when an
internal check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time

import numpy as np

from .baselines import best_neighbors, clique_expand, top_neighbors
from .hlc import minimize_hlc
from .hypergraph import InvalidNodeError
from .io import DatasetParseError, LabeledDataset, load_hypergraph, save_dataset
from .metrics import f1_metrics
from .oracle import OracleCapError, brute_min_conductance, brute_min_hlc, brute_min_st_cut
from .protocol import delta_sweep, grow_seed_protocol
from .splitting import UnsupportedSplittingError, delta_linear, parse_splitting
from .synth import synth_delta_mode, synth_planted, synth_scaling
from .theorems import TheoremCheckInput, check_theorems, worked_example_instance

logger = logging.getLogger("hyperlocal")

DEFAULT_DELTA = 5000.0


class InputError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _emit(record):
    # strict JSON has no NaN or inf
    clean = {k: (None if math.isnan(v) else str(v)) if isinstance(v, float) and not math.isfinite(v) else v for k, v in record.items()}
    print(json.dumps(clean, sort_keys=True, default=_jsonable, allow_nan=False), flush=True)


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _table(rows, columns):
    widths = [max(len(c), *(len(_fmt(r.get(c))) for r in rows)) for c in columns]
    out = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    out += ["  ".join(_fmt(r.get(c)).ljust(w) for c, w in zip(columns, widths)) for r in rows]
    print("\n".join(out), file=sys.stderr)


def _fmt(v):
    if isinstance(v, float):
        return "inf" if math.isinf(v) else f"{v:.4g}"
    return "" if v is None else str(v)


def _range(text):
    lo, _, hi = text.partition("-")
    try:
        return (int(lo), int(hi or lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


# ---------------------------------------------------------------- loading


def _splitting_factory(args):
    spec = getattr(args, "splitting", None)
    if spec:
        try:
            return parse_splitting(spec)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    delta = getattr(args, "delta", None)
    if delta is None:
        return None
    if delta < 1:
        raise InputError("--delta must be at least 1")
    return lambda k, w=1.0: delta_linear(k, delta, w)


def _load(args) -> LabeledDataset:
    try:
        return load_hypergraph(args.hypergraph, getattr(args, "labels", None), splitting=_splitting_factory(args))
    except OSError as exc:
        raise InputError(f"cannot read {exc.filename}: {exc.strerror}") from None


def _nodes(ds, tokens, what):
    index = ds.index
    missing = [t for t in tokens if t not in index]
    if missing:
        raise InputError(f"{what}: unknown node ids {missing[:5]}")
    return frozenset(index[t] for t in tokens)


def _target(ds, name):
    if name is None:
        return None
    if name not in ds.labels:
        raise InputError(f"no cluster named {name!r}; known: {sorted(ds.labels)[:10]}")
    return ds.labels[name]


def _names(ds, nodes):
    return sorted(ds.ids[v] for v in nodes)


def _setup_seeds(args, ds):
    """Seeds and reference from explicit ids or from the seed-growing protocol."""
    target = _target(ds, args.cluster)
    if args.reference:
        ref = _nodes(ds, args.reference, "--reference")
        seeds = _nodes(ds, args.seeds or [], "--seeds")
        return target, seeds, ref
    if target is None:
        raise InputError("give --cluster (with --labels) or --reference")
    grow = int(round(args.grow * len(target)))
    seeds, ref = grow_seed_protocol(ds.hypergraph, target, args.seed_frac, grow, args.rng_seed)
    return target, seeds, ref


# ---------------------------------------------------------------- commands


def cmd_cluster(args):
    ds = _load(args)
    h = ds.hypergraph
    target, seeds, ref = _setup_seeds(args, ds)
    anchor = seeds if args.anchor else frozenset()
    start = time.perf_counter()
    report = minimize_hlc(h, ref, args.eps, anchor, local=not args.global_solve)
    elapsed = time.perf_counter() - start
    record = {
        "command": "cluster",
        "rng_seed": args.rng_seed,
        "eps": args.eps,
        "delta": None if args.splitting else args.delta,
        "splitting": args.splitting,
        "cluster": args.cluster,
        "seeds": _names(ds, seeds),
        "reference_size": len(ref),
        "best_set": _names(ds, report.best_set),
        "size": len(report.best_set),
        "objective": report.objective,
        "conductance": h.conductance(report.best_set),
        "iterations": report.iterations,
        "anchored": report.anchored,
        "seconds": elapsed,
    }
    if target is not None:
        record["precision"], record["recall"], record["f1"] = f1_metrics(report.best_set, target)
    _emit(record)
    if args.trace:
        for i, t in enumerate(report.trace):
            _emit({"trace": i, "alpha": t.alpha, "cut": t.cut, "omega": t.omega, "size": t.size})
        for i, st in enumerate(report.solves):
            for j, rs in enumerate(st.rounds):
                _emit({"solve": i, "round": j, "nodes": rs.nodes, "edges": rs.edges, "explored": rs.explored})
    _table([record], ["cluster", "size", "objective", "iterations", "f1", "seconds"])


def _cmd_rank(args, rank, name):
    ds = _load(args)
    target = _target(ds, args.cluster)
    if args.seeds:
        seeds = _nodes(ds, args.seeds, "--seeds")
    elif target is not None:
        seeds, _ = grow_seed_protocol(ds.hypergraph, target, args.seed_frac, 0, args.rng_seed)
    else:
        raise InputError("give --seeds or --cluster")
    if args.k is not None:
        k = args.k
    elif target is not None:
        k = max(len(target) - len(seeds), 0)
    else:
        raise InputError("give -k when no target cluster is named")
    if k < 0:
        raise InputError("-k must be nonnegative")
    ranked = rank(ds.hypergraph, seeds, k)
    found = seeds | frozenset(ranked)
    record = {
        "command": name,
        "rng_seed": args.rng_seed,
        "cluster": args.cluster,
        "seeds": _names(ds, seeds),
        "ranked": [ds.ids[v] for v in ranked],
        "size": len(found),
    }
    if target is not None:
        record["precision"], record["recall"], record["f1"] = f1_metrics(found, target)
    _emit(record)
    _table([record], ["cluster", "size", "f1"])


def cmd_expand(args):
    ds = _load(args)
    g, dropped = clique_expand(ds.hypergraph, args.weighted, args.max_size)
    if args.out:
        save_dataset(LabeledDataset(g, ds.labels, ds.ids), args.out, args.labels_out)
    record = {"command": "expand", "edges": g.num_edges, "discarded": dropped, "weighted": args.weighted}
    _emit(record)
    _table([record], ["edges", "discarded", "weighted"])


def cmd_oracle(args):
    ds = _load(args)
    h = ds.hypergraph
    try:
        if args.mode == "conductance":
            value, best = brute_min_conductance(h)
        else:
            if not args.reference:
                raise InputError("--reference is required for this mode")
            ref = _nodes(ds, args.reference, "--reference")
            if args.mode == "hlc":
                value, best = brute_min_hlc(h, ref, args.eps)
            else:
                if args.alpha is None:
                    raise InputError("--alpha is required for mode st-cut")
                value, best = brute_min_st_cut(h, ref, args.eps, args.alpha)
    except OracleCapError as exc:
        raise InputError(str(exc)) from None
    record = {"command": "oracle", "mode": args.mode, "value": value, "witness": _names(ds, best)}
    if args.compare and args.mode == "hlc":
        report = minimize_hlc(h, ref, args.eps)
        record["hyperlocal"] = report.objective
        record["match"] = abs(report.objective - value) <= 1e-9 * max(1.0, abs(value))
        if not record["match"]:
            _emit(record)
            raise CheckFailed(f"oracle {value} disagrees with minimize_hlc {report.objective}")
    _emit(record)
    _table([record], ["mode", "value", "hyperlocal"])


def cmd_synth(args):
    if args.mode == "planted":
        ds = synth_planted(
            args.n_nodes,
            args.n_clusters,
            args.cluster_size if args.cluster_size[0] != args.cluster_size[1] else args.cluster_size[0],
            args.edge_sizes,
            args.p_in,
            args.p_cross,
            seed=args.seed,
            noise=args.noise,
        )
    elif args.mode == "scaling":
        ds = synth_scaling(args.n_nodes, seed=args.seed)
    else:
        ds = synth_delta_mode(args.mode, seed=args.seed)
    save_dataset(ds, args.out, args.labels_out)
    h = ds.hypergraph
    rows = [{"cluster": k, "size": len(v), "conductance": h.conductance(v)} for k, v in ds.labels.items()]
    _emit({"command": "synth", "mode": args.mode, "seed": args.seed, "nodes": h.n, "edges": h.num_edges, "clusters": rows})
    _table(rows, ["cluster", "size", "conductance"])


def cmd_sweep(args):
    ds = _load(args)
    names = args.clusters or sorted(ds.labels)
    targets = [_target(ds, n) for n in names]
    rows = delta_sweep(ds.hypergraph, targets, args.deltas, args.seed_frac, args.grow, args.eps, args.rng_seed)
    for row in rows:
        row["cluster"] = names[row.pop("target")]
        row["rng_seed"] = args.rng_seed
        _emit(row)
    summary = [
        {"delta": d, "mean_f1": float(np.mean([r["f1"] for r in rows if r["delta"] == d]))}
        for d in sorted(set(args.deltas))
    ]
    _table(summary, ["delta", "mean_f1"])


def cmd_check_theorems(args):
    if args.worked_example:
        h, target, ref = worked_example_instance()
        eps = h.min_locality(ref)
    else:
        if not args.hypergraph:
            raise InputError("give --hypergraph or --worked-example")
        ds = _load(args)
        h = ds.hypergraph
        target = _target(ds, args.cluster)
        if target is None or not args.reference:
            raise InputError("give --cluster and --reference")
        ref = _nodes(ds, args.reference, "--reference")
        eps = args.eps if args.eps is not None else h.min_locality(ref)
    report = minimize_hlc(h, ref, eps)
    inp = TheoremCheckInput.measure(h, target, ref, eps)
    ledger = check_theorems(h, report.best_set, target, inp)
    for c in ledger.checks:
        _emit({"check": c.name, "status": c.status, "value": c.value, "bound": c.bound, "reason": c.reason})
    _emit({"command": "check-theorems", "ok": ledger.ok, **ledger.params})
    print("\n".join(ledger.lines()), file=sys.stderr)
    if not ledger.ok:
        raise CheckFailed(f"{len(ledger.failures)} bound(s) violated")


# ---------------------------------------------------------------- parser


def _protocol_args(p):
    p.add_argument("--cluster", help="label of the target cluster")
    p.add_argument("--seed-frac", type=float, default=0.05, help="fraction of the cluster sampled as seeds")
    p.add_argument("--rng-seed", type=int, default=0)


def _data_args(p, labels=True):
    p.add_argument("--hypergraph", required=True, help="hyperedge file, one edge per line")
    if labels:
        p.add_argument("--labels", help="label file, 'name: id id ...' per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperlocal", description="Strongly local hypergraph clustering.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cluster", help="grow a cluster around a reference set")
    _data_args(p)
    _protocol_args(p)
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=DEFAULT_DELTA, help="delta-linear threshold for every edge")
    p.add_argument("--splitting", help="override: aon[:w], dlt:delta[:scale] or clique[:w]")
    p.add_argument("--grow", type=float, default=2.0, help="best neighbors added, as a multiple of |T|")
    p.add_argument("--reference", nargs="+", help="explicit reference node ids")
    p.add_argument("--seeds", nargs="+", help="explicit seed ids (subset of the reference)")
    p.add_argument("--no-anchor", dest="anchor", action="store_false", help="do not force seeds into the result")
    p.add_argument("--global", dest="global_solve", action="store_true", help="solve each cut on the whole hypergraph")
    p.add_argument("--trace", action="store_true", help="emit per-iteration and per-round records")
    p.set_defaults(func=cmd_cluster)

    for name, rank in (("topn", top_neighbors), ("bestn", best_neighbors)):
        p = sub.add_parser(name, help=f"{'count' if name == 'topn' else 'fraction'}-ranked seed neighbors")
        _data_args(p)
        _protocol_args(p)
        p.add_argument("--seeds", nargs="+", help="explicit seed ids")
        p.add_argument("-k", type=int, help="neighbors to return (default |T| - |seeds|)")
        p.set_defaults(func=lambda a, r=rank, n=name: _cmd_rank(a, r, n))

    p = sub.add_parser("expand", help="clique expansion to a graph")
    _data_args(p)
    p.add_argument("--weighted", action="store_true", help="weight each clique edge by 1/|e|")
    p.add_argument("--max-size", type=int, default=50, help="discard hyperedges with this many nodes or more")
    p.add_argument("--out", help="write the expanded graph here")
    p.add_argument("--labels-out")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oracle", help="brute-force minima on small hypergraphs")
    _data_args(p, labels=False)
    p.add_argument("--mode", choices=("hlc", "st-cut", "conductance"), default="hlc")
    p.add_argument("--reference", nargs="+")
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--alpha", type=float)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--splitting")
    p.add_argument("--compare", action="store_true", help="also run the flow method and require agreement")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("synth", help="write a synthetic planted dataset")
    p.add_argument("--mode", choices=("planted", "scaling", "noisy", "clean"), default="planted")
    p.add_argument("--n-nodes", type=int, default=1000)
    p.add_argument("--n-clusters", type=int, default=10)
    p.add_argument("--cluster-size", type=_range, default=(30, 80))
    p.add_argument("--edge-sizes", type=_range, default=(3, 6))
    p.add_argument("--p-in", type=float, default=0.2)
    p.add_argument("--p-cross", type=float, default=0.002)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--labels-out")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("sweep", help="F1 across delta-linear thresholds")
    _data_args(p)
    p.add_argument("--deltas", type=_floats, default=[1.0, 2.0, 5.0, 10.0, 100.0, 1000.0, 5000.0])
    p.add_argument("--clusters", nargs="+", help="labels to evaluate (default all)")
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--seed-frac", type=float, default=0.05)
    p.add_argument("--grow", type=float, default=2.0)
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check-theorems", help="check the cut-improvement bounds on one run")
    p.add_argument("--hypergraph")
    p.add_argument("--labels")
    p.add_argument("--cluster", help="target set T")
    p.add_argument("--reference", nargs="+")
    p.add_argument("--eps", type=float, help="defaults to vol(R)/vol(V-R)")
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--splitting")
    p.add_argument("--worked-example", action="store_true", help="use the built-in half-volume instance")
    p.set_defaults(func=cmd_check_theorems)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except (InputError, DatasetParseError, InvalidNodeError, UnsupportedSplittingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
