#!/usr/bin/env python3
"""
Run the acceptance suite and print a pass/fail table

Every criterion is run at full size (100 theorem samples per K, the whole
counterexample catalog, FALSIFY_TRIALS falsification candidates), so expect
a few minutes. The table records which catalog entries needed proof hints.

Usage:
    python scripts/run_acceptance.py [--seed 42] [--json results.json]
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from dotenv import load_dotenv
load_dotenv()

from config.settings import DEFAULT_SEED, FALSIFY_TRIALS
from counterexamples.catalog import Catalog
from counterexamples.certifier import falsify, top_problem
from counterexamples.constructions import b2_equality_report, build_counterexample
from counterexamples.type_d import WITNESS_T, pfaffian_demo_report, type_d_report, typeD_pfaffian_point
from pinning.groups import GroupDescriptor
from positivity.harness import (
    distinguished_report,
    duality_report,
    longest_word_folding_report,
    mr_consistency_report,
    pinning_report,
    theorem_forward_report,
)

# Catalog entries that must certify without proof hints
NO_HINT_REQUIRED = ("C.case_i.n2.K1", "C.case_i.n3.K2", "B.case_i.n3.K1", "B.case_i.n3.K2")

SMALL_CASES = (("C", 2, [1]), ("C", 3, [2]), ("B", 3, [1]))


def pinning_validity(seed):
    reports = [pinning_report(GroupDescriptor(s, n), 20, seed) for s in ("C", "B") for n in (2, 3, 4)]
    reports.append(pinning_report(GroupDescriptor("D", 4), 20, seed))
    member = [c for r in reports for c in r.checks if "group member" in c.name]
    return all(c.passed for c in member), f"{len(member)} generator checks"


def compatibility(seed):
    reports = [pinning_report(GroupDescriptor(s, n), 1, seed) for s in ("C", "B") for n in (2, 3, 4)]
    checks = [c for r in reports for c in r.checks if c.name.startswith("root")]
    return all(c.passed for c in checks), f"{len(checks)} identity groups"


def longest_word_folding(seed):
    notes, ok = [], True
    for system in ("C", "B"):
        for n in (2, 3):
            report = longest_word_folding_report(system, n)
            expected = n * (2 * n - 1) if system == "C" else n * (2 * n + 1)
            lengths = {c.witness for c in report.checks}
            ok &= report.passed and lengths == {expected}
            if n == 2:
                ok &= report.descriptor["reduced_words"] == 2
            notes.append(f"{system}({n}): {report.descriptor['reduced_words']} words")
    return ok, ", ".join(notes)


def theorem_forward(seed):
    count, ok = 0, True
    for system in ("C", "B"):
        for n in (2, 3):
            for K in ([n], [n - 1, n], list(range(1, n + 1))):
                report = theorem_forward_report(GroupDescriptor(system, n), K, 100, seed)
                ok &= report.passed
                count += report.samples
    return ok, f"{count} samples"


def counterexample_suite(seed):
    catalog = Catalog()
    report = catalog.summary_report()
    hinted = [c.name for c in report.checks if c.witness["used_hints"]]
    ok = report.passed and not set(hinted) & set(NO_HINT_REQUIRED)
    return ok, f"{report.summary()}; hints used by {hinted or 'none'}"


def falsification(seed):
    notes, ok = [], True
    for system, n, K in SMALL_CASES:
        c = build_counterexample(system, n, K)
        report = falsify(top_problem(c), FALSIFY_TRIALS, seed)
        ok &= report.passed
        notes.append(c.name)
    return ok, f"{FALSIFY_TRIALS} candidates each for {', '.join(notes)}"


def b2_equality(seed):
    report = b2_equality_report(20, seed)
    return report.passed, report.summary()


def type_d(seed):
    report = type_d_report(20, seed)
    ones = typeD_pfaffian_point([1] * 6)
    corners = ones.pfaffians[()] == 1 and ones.pfaffians[(1, 2, 3, 4)] == 1
    demo = pfaffian_demo_report(WITNESS_T)
    return report.passed and demo.passed and corners, f"{report.summary()}; witness t = {list(WITNESS_T)}"


def distinguished(seed):
    reports = [distinguished_report("C", 2, exhaustive=True), distinguished_report("B", 2, exhaustive=True),
               distinguished_report("C", 3), distinguished_report("B", 3)]
    return all(r.passed for r in reports), "; ".join(r.summary() for r in reports)


def duality(seed):
    reports = [duality_report(GroupDescriptor(s, n), 50, seed) for s in ("C", "B") for n in (2, 3)]
    return all(r.passed for r in reports), f"{sum(len(r.checks) for r in reports)} elements"


def deodhar(seed):
    reports = [mr_consistency_report(GroupDescriptor(s, 2), 100, seed) for s in ("C", "B")]
    return all(r.passed for r in reports), "; ".join(r.summary() for r in reports)


# Wall-clock limits in seconds; a criterion over its limit fails
BUDGETS = {"pinning validity": 5.0}

CRITERIA = [
    ("pinning validity", pinning_validity),
    ("folding compatibility", compatibility),
    ("longest-word folding", longest_word_folding),
    ("forward theorem", theorem_forward),
    ("counterexample catalog", counterexample_suite),
    ("certifier falsification", falsification),
    ("B(2) extension", b2_equality),
    ("type D Pfaffians", type_d),
    ("distinguished subexpressions", distinguished),
    ("perp duality", duality),
    ("Deodhar consistency", deodhar),
]


def main():
    parser = argparse.ArgumentParser(description="Run the acceptance suite")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--json", dest="json_path", default=None, help="Also write the table as JSON")
    args = parser.parse_args()
    logging.basicConfig(level=logging.WARNING, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    print(f"Acceptance suite (seed {args.seed})")
    print("=" * 72)
    rows = []
    for number, (label, run) in enumerate(CRITERIA, 1):
        start = time.time()
        try:
            ok, note = run(args.seed)
        except Exception as e:
            ok, note = False, f"error: {e}"
        elapsed = time.time() - start
        budget = BUDGETS.get(label)
        if ok and budget is not None and elapsed > budget:
            ok, note = False, f"{note}; over the {budget:g}s budget"
        rows.append({"criterion": number, "name": label, "passed": bool(ok), "seconds": round(elapsed, 1), "note": note})
        print(f"{number:>2}. [{'PASS' if ok else 'FAIL'}] {label:<30} {elapsed:7.1f}s  {note}")

    print("=" * 72)
    passed = sum(1 for r in rows if r["passed"])
    print(f"{passed}/{len(rows)} criteria passed")
    if args.json_path:
        Path(args.json_path).write_text(json.dumps(rows, indent=2), encoding="utf-8")
    return 0 if passed == len(rows) else 1


if __name__ == '__main__':
    sys.exit(main())
