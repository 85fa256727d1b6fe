"""Driving the batch runner programmatically: graph files, flip scripts
and machine-readable reports."""

import json
import pathlib
import tempfile

from qshear.cli import main
from qshear.fatgraph import graph_to_dict, spine_graph_an

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    # write a graph file and validate it
    graph_file = tmp / "chain4.json"
    graph_file.write_text(json.dumps(graph_to_dict(spine_graph_an(4)), indent=1))
    code = main(["--suite", "graph-validate", "--graph", str(graph_file)])
    print("graph-validate exit status:", code)

    # run a couple of suites into a report document
    report_file = tmp / "report.json"
    code = main(
        ["--suite", "pvi", "--suite", "an-core", "--report", str(report_file),
         "--oracle-mod", "5,7", "--seed", "1"]
    )
    doc = json.loads(report_file.read_text())
    print("\nenvironment:", doc["environment"])
    print("identities in report:", len(doc["identities"]))

    # apply a flip script to seeded shears on the graph
    script = tmp / "moves.txt"
    script.write_text("flip X1\npflip S\nflip X2\n")
    out = tmp / "moved.json"
    code = main(["--flip-script", str(script), "--graph", str(graph_file),
                 "--report", str(out)])
    moved = json.loads(out.read_text())
    print("\nshears after the script:",
          {k: round(v, 3) for k, v in moved["values"].items()})
