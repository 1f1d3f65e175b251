"""Scan every connected graph on at most six vertices.

Run with ``python demos/03_atlas_probe.py [max_n] [jobs]``.
"""

from __future__ import annotations

import sys

from lmss import ScanConfig, enumerate_connected_graphs, scan

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
jobs = int(sys.argv[2]) if len(sys.argv) > 2 else 1

print("classes per order:", [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, max_n + 1)])

summary = scan(
    ScanConfig(("theorem2", "corollary1", "lemma_match", "nt_extension", "open_question"), max_n=max_n, jobs=jobs)
).to_dict()

for check, counts in summary["checks"].items():
    print(f"{check:14s} {counts}")

# The probe pairs "G has a proper local set" with "L(G) has one".
oq = summary["open_question"]
for key, count in oq["classification"].items():
    print(f"{key:36s} {count}")

# Under the Ψ − Ω reading even the path on three vertices is flagged, which is
# why candidates are reported and never treated as an answer.
smallest = sorted(oq["candidates"], key=lambda r: (len(r["edges"]), r["graph6"]))[:3]
for rec in smallest:
    print("candidate", rec["graph6"], rec["edges"], "witness", rec["probe"]["G_witness"])
