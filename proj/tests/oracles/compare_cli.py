"""Compare the CLI's diagrams and Moebius tables with the brute-force oracle.

Usage: compare_cli.py PATH_TO_FLAGWEAK
"""
import csv
import io
import json
import os
import subprocess
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from brute_force import Poset  # noqa: E402


def parse_general(text):
    vals, cols = [], []
    for part in text.split(","):
        v, c = part.split("^")
        vals.append(int(v))
        cols.append(int(c))
    return tuple(cols), tuple(vals)


def run(cli, *args):
    return subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout


def compare(cli, r, n):
    P = Poset(r, n)
    doc = json.loads(run(cli, "hasse", "--r", str(r), "--n", str(n), "--format", "json"))
    nodes = {node["id"]: parse_general(node["window"]) for node in doc["nodes"]}
    problems = []
    if set(nodes.values()) != set(P.els):
        problems.append("element sets differ")
    got = {(nodes[e["from"]], nodes[e["to"]], e["gen"]) for e in doc["edges"]}
    want = {(x, y, P.label(x, y)) for x in P.els for y in P.covers[x]}
    if got != want:
        problems.append("cover edges differ: %d extra, %d missing" % (len(got - want), len(want - got)))

    rows = list(csv.DictReader(io.StringIO(run(cli, "mobius", "--r", str(r), "--n", str(n)))))
    pairs = sum(len(P.up[x]) for x in P.els)
    if len(rows) != pairs:
        problems.append("mobius table has %d rows, expected %d" % (len(rows), pairs))
    for row in rows:
        x, y = parse_general(row["from"]), parse_general(row["to"])
        if int(row["mobius"]) != P.mobius(x, y):
            problems.append("mobius(%s, %s)" % (row["from"], row["to"]))
            break
    return problems


def main():
    cli = sys.argv[1]
    failed = False
    for r, n in [(1, 3), (2, 2), (2, 3), (3, 2), (4, 2)]:
        problems = compare(cli, r, n)
        print("G(%d,%d): %s" % (r, n, "ok" if not problems else "; ".join(problems)))
        failed |= bool(problems)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
