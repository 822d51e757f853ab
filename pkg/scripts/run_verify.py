#!/usr/bin/env python3
"""Run the full verification suite and exit nonzero on any failure.

Equivalent to `bh verify --all`; kept as a script so the whole pipeline can
be driven without the console entry point.
"""
import sys

from bhdual.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "--all"]))
