#!/usr/bin/env python3
"""Run every classification mode over the shipped catalog and print reports.

Usage: python3 scripts/reproduce_classification.py [--json]
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from flat4spec import load_catalog
from flat4spec.classify import MODES, classify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true",
                        help="emit one JSON report per mode")
    args = parser.parse_args()

    catalog = load_catalog()
    groups = catalog.groups()
    for mode in MODES:
        report = classify_all(groups, mode)
        if args.json:
            print(report.to_json())
            continue
        nontrivial = report.nontrivial_classes()
        print(f"mode {mode}: {len(report.classes)} classes, "
              f"{len(nontrivial)} with more than one member")
        for cls in nontrivial:
            print("  {" + ", ".join(cls) + "}")
        for gid, msg in sorted(report.errors.items()):
            print(f"  [error] {gid}: {msg}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
