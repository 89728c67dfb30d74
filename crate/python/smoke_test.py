#!/usr/bin/env python3
"""Smoke test for the minrank_py extension module.

Builds the cdylib if needed, loads it from a temporary directory under the
importable name, and exercises the main surface: graph parsing, the exact
solver, witness search, exact rank, and the tree/zero-forcing helpers.

Run from anywhere:  python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import sysconfig
import tempfile
from fractions import Fraction
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def build_extension() -> Path:
    cdylib = REPO_ROOT / "target" / "release" / "libminrank_py.so"
    if not cdylib.exists():
        subprocess.run(
            ["cargo", "build", "-p", "minrank-py", "--release"],
            cwd=REPO_ROOT,
            check=True,
        )
    if not cdylib.exists():  # e.g. non-Linux naming
        matches = list((REPO_ROOT / "target" / "release").glob("*minrank_py*"))
        raise SystemExit(f"extension library not found; release dir has {matches}")
    return cdylib


def import_module(cdylib: Path, scratch: Path):
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    target = scratch / f"minrank_py{suffix}"
    shutil.copy2(cdylib, target)
    sys.path.insert(0, str(scratch))
    import minrank_py  # noqa: E402

    return minrank_py


def main() -> None:
    cdylib = build_extension()
    with tempfile.TemporaryDirectory() as scratch:
        mr = import_module(cdylib, Path(scratch))

        # Graph construction and graph6 round trip.
        p4 = mr.Graph.from_graph6("Ch")
        assert p4.n == 4 and p4.edges() == [(0, 1), (1, 2), (2, 3)]
        assert mr.Graph(4, [(0, 1), (1, 2), (2, 3)]).to_graph6() == "Ch"
        assert mr.Graph.from_graph6(p4.to_graph6()) == p4
        assert p4 == mr.Graph.path(4)
        assert p4.has_edge(2, 1) and not p4.has_edge(0, 2)
        assert p4.degree(1) == 2
        assert mr.Graph.from_edge_list("n=3\n0 1\n1 2\n").edges() == [(0, 1), (1, 2)]

        # Bounds and tree helpers.
        assert p4.zero_forcing_number() == 1
        assert mr.zero_forcing_number(p4) == 1
        assert mr.tree_minimum_rank(p4) == 3
        assert mr.path_cover_number(p4) == 1
        try:
            mr.tree_minimum_rank(mr.Graph.cycle(4))
        except ValueError:
            pass
        else:
            raise AssertionError("cycle accepted as a tree")

        # The exact solver, end to end.
        report = mr.minimum_rank(p4)
        assert report["status"] == "EXACT"
        assert report["mr"] == 3
        assert report["mr_certified_real"] is True
        assert report["max_nullity"] == 1 and report["max_multiplicity"] == 1
        witness = report["witness"]
        assert witness is not None and len(witness) == 4
        assert all(isinstance(c, Fraction) for row in witness for c in row)
        assert mr.rank(witness) == 3
        # Off-diagonal support matches the graph exactly.
        for i in range(4):
            for j in range(4):
                if i != j:
                    assert (witness[i][j] != 0) == p4.has_edge(i, j)

        assert mr.minimum_rank(mr.Graph.edgeless(3))["mr"] == 0
        assert mr.minimum_rank(mr.Graph.complete(4), bound=1)["mr"] == 1
        report = mr.minimum_rank(mr.Graph.from_graph6("A?"))
        assert report["mr"] == 0 and len(report["components"]) == 2

        # Witness search and exact rank.
        w = mr.find_witness(p4, 3)
        assert w is not None and mr.rank(w) == 3
        assert mr.find_witness(p4, 2, attempts=500) is None
        assert mr.rank("1 2\n2 4") == 1
        assert mr.rank([[1, 2], [3, 4]]) == 2
        assert mr.rank([[Fraction(1, 2), 1], ["1", "2"]]) == 1
        try:
            mr.rank("1 2\n3")
        except ValueError:
            pass
        else:
            raise AssertionError("ragged matrix accepted")

        # Symbolic layer.
        sym = mr.symbolic_matrix(p4)
        assert sym[0] == ["x0", "y0", "0", "0"]
        level = mr.enumerate_minors(p4, 3)
        assert level["total"] == 16 and len(level["distinct"]) == 10
        level = mr.enumerate_minors(p4, 4)
        assert level["distinct"] == [
            "y2^2*y0^2 - x1*x0*y2^2 - x3*x0*y1^2 - x3*x2*y0^2 + x3*x2*x1*x0"
        ]

        # Components carry original vertex labels.
        g = mr.Graph(5, [(0, 1), (3, 4)])
        comps = g.components()
        assert [vs for _, vs in comps] == [[0, 1], [2], [3, 4]]

    print("minrank_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
