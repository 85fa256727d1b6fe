"""Batch entry point: run verification suites and emit a JSON report."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .suites import RunConfig, list_suites, run_suite


def run_flip_script_file(args):
    import numpy as np

    from .fatgraph import graph_to_dict, load_graph
    from .flips import ShearState, run_flip_script

    if len(args.graph) != 1:
        print("error: --flip-script needs exactly one --graph", file=sys.stderr)
        return 2
    try:
        graph = load_graph(args.graph[0])
        rng = np.random.default_rng(args.seed)
        values = {e: float(rng.uniform(-2, 2)) for e in graph.edges}
        params = {"omega0": 0.5, "omega1": 0.5, "omega2": 0.5}
        state = ShearState(graph, values, params)
        with open(args.flip_script, "r", encoding="utf-8") as fh:
            state = run_flip_script(state, fh.readlines())
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    document = {
        "graph": graph_to_dict(state.graph),
        "initial": values,
        "values": state.values,
    }
    text = json.dumps(document, indent=1, sort_keys=True)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="qshear",
        description="verify the quantum shear-coordinate identity catalog",
    )
    p.add_argument("--suite", action="append", default=[], metavar="NAME",
                   help="suite to run (repeatable); see --list-suites")
    p.add_argument("--graph", action="append", default=[], metavar="FILE",
                   help="graph file for graph-validate or --flip-script")
    p.add_argument("--flip-script", metavar="FILE",
                   help="apply 'flip/pflip/decor' lines to the --graph and "
                        "print the resulting shears")
    p.add_argument("--report", metavar="FILE", help="write the JSON report here")
    p.add_argument("--oracle-mod", default="5,7", metavar="LIST",
                   help="comma-separated root-of-unity moduli (default 5,7)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=20240229)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--list-suites", action="store_true")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.list_suites:
        print(list_suites())
        return 0
    if args.flip_script:
        return run_flip_script_file(args)
    if not args.suite:
        print("error: no suites requested (use --suite NAME or --list-suites)", file=sys.stderr)
        return 2
    try:
        moduli = tuple(int(x) for x in args.oracle_mod.split(",") if x)
        config = RunConfig(
            suites=args.suite,
            graphs=args.graph,
            oracle_moduli=moduli,
            samples=args.samples,
            seed=args.seed,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    results = {}
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            futures = {name: pool.submit(run_suite, name, config) for name in config.suites}
            for name, fut in futures.items():
                results[name] = fut.result()
    else:
        for name in config.suites:
            results[name] = run_suite(name, config)

    reports = []
    for name in config.suites:
        for rep in results[name]:
            item = rep.to_json()
            item["suite"] = name
            reports.append(item)

    ok = all(r["status"] == "pass" for r in reports)
    document = {
        "schema": "qshear-report-1",
        "environment": {
            "version": __version__,
            "seed": config.seed,
            "moduli": list(config.oracle_moduli),
            "samples": config.samples,
        },
        "identities": reports,
    }
    text = json.dumps(document, indent=1, sort_keys=True)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    for r in reports:
        mark = "pass" if r["status"] == "pass" else "FAIL"
        print(f"[{mark}] {r['suite']}: {r['id']}")
    print(f"{sum(1 for r in reports if r['status'] == 'pass')}/{len(reports)} identities pass")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
