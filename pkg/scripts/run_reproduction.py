#!/usr/bin/env python3
"""Run every bundled scenario and the reproduction checks; exits 2 on any
failed criterion (two clauses fail by design, see README)."""
import sys

from wagedyn.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-all", "--out", "out/reproduction"]))
