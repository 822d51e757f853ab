#!/usr/bin/env python3
"""Write DOT files for every fixture row: the curve configuration, the
rule-built diagram, and the K-lattice diagram.

Usage: python scripts/render_diagrams.py [output_dir]
"""
import sys
from pathlib import Path

from bhdual.cli import _diagram_of, _sanitize
from bhdual.curveconf import build_configuration, dual_graph_dot
from bhdual.fixtures import load_rows


def main(out_dir: str = "diagrams") -> int:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for row in load_rows():
        stem = _sanitize(row.name)
        conf = build_configuration(row)
        (out / f"{stem}_config.dot").write_text(dual_graph_dot(conf, name=f"config_{stem}"))
        for source in ("rules", "ktheory"):
            diagram = _diagram_of(row, source)
            (out / f"{stem}_{source}.dot").write_text(diagram.dot(name=f"{source}_{stem}"))
    print(f"wrote {3 * len(load_rows())} DOT files to {out}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(*sys.argv[1:]))
