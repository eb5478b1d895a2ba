#!/usr/bin/env python3
"""Run every catalogue instance through its applicable suites and print a
one-line verdict per (example, suite) pair.  Exit code 1 if anything fails."""

import sys
import time

from entwine.catalogue import EXAMPLE_NAMES, build
from entwine.docformat import document_from_example
from entwine.suites import run_suite

VARIANTS = {
    "group-algebra": [{}, {"group": "Z3"}, {"group": "Z4"}, {"group": "S3"}, {"group": "Z3", "p": 7}],
    "dual-group-algebra": [{}, {"group": "S3"}],
    "sweedler-h4": [{}, {"p": 5}],
    "trivial-hopf-galois": [{}, {"group": "Z3"}, {"group": "Z4"}],
    "quadratic-field-extension": [{"d": 2}, {"d": 3}, {"d": -1}],
    "group-coextension": [{}, {"group": "Z3"}],
    "coset-coideal": [{"group": "S3"}, {"group": "Z4"}],
    "flip-entwining": [{}, {"algebra": "Z3", "coalgebra": "Z2"}],
}


def applicable_suites(doc):
    suites = ["structures"]
    if doc.psi is not None:
        suites.append("entwining")
    if doc.coaction is not None:
        suites.append("galois")
    if doc.action is not None:
        suites.append("cogalois")
    if len(doc.coideals) >= 2:
        suites.append("cogenerate")
    return suites


def main() -> int:
    failures = 0
    for name in EXAMPLE_NAMES:
        for params in VARIANTS[name]:
            doc = document_from_example(build(name, params))
            label = name + ("" if not params else f" {params}")
            for suite in applicable_suites(doc):
                start = time.perf_counter()
                report = run_suite(doc, suite, cutoff=7)
                elapsed = time.perf_counter() - start
                marker = "ok " if report.ok else "FAIL"
                print(f"[{marker}] {label:<45s} {suite:<10s} {len(report.entries):3d} checks  {elapsed * 1000:7.1f} ms")
                if not report.ok:
                    failures += 1
                    for entry in report.entries:
                        if entry.status == "fail":
                            print(f"       failed: {entry.check_id}: {entry.statement}")
    print("all suites passed" if not failures else f"{failures} suite(s) failed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
