#!/usr/bin/env python
"""
Acceptance Runner

Runs the acceptance checks of the extension library and writes a markdown
report with one row per check.

Usage:
    python scripts/acceptance_report.py --all             # Run every check
    python scripts/acceptance_report.py --test 5          # Run one check by number
    python scripts/acceptance_report.py --all --report out/acceptance.md
"""

import argparse
import os
import sys
import time
from datetime import datetime
from itertools import combinations
from typing import List, Tuple

# Add parent dir to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import numpy as np

from app.core.errors import SingularExtensionError
from app.core.logger import logger
from app.extension import build_spec, check_nodeless, extension_degree, halfint_equivalence, xi_polynomial
from app.extension.sampler import candidates, random_specs
from app.families import FamilyTag, all_families, get_family, make_params
from app.seeds import classify_seed, make_seed
from app.seeds.builder import seed_regions
from app.seeds.models import SeedKind, SeedRef
from app.verify import (
    check_norms,
    family_spectrum,
    schrodinger_spectrum,
    verify_isospectral,
    verify_shape_invariance,
)

REPORT_FILE = "acceptance_report.md"

# Colors
GREEN = "\033[92m"
RED = "\033[91m"
YELLOW = "\033[93m"
CYAN = "\033[96m"
BOLD = "\033[1m"
RESET = "\033[0m"

MORSE = {"h": "10/3", "mu": "1"}
CLASSIFY_PARAMS = {
    FamilyTag.M: {"h": "10/3", "mu": "1"},
    FamilyTag.S: {"h": "7/3"},
    FamilyTag.RM: {"h": "10/3", "mu": "4"},
    FamilyTag.HST: {"h": "7/3", "mu": "1"},
    FamilyTag.KH: {"g": "5/3", "mu": "9"},
    FamilyTag.HDPT: {"g": "5/3", "h": "10"},
}


class CheckOutcome:
    """Result of a single acceptance check."""

    def __init__(self, name: str, passed: bool, details: str = "", duration: float = 0.0):
        self.name = name
        self.passed = passed
        self.details = details
        self.duration = duration


class AcceptanceRunner:
    """Runs the numbered acceptance checks."""

    def __init__(self, report_file: str = REPORT_FILE):
        self.report_file = report_file
        self.results: List[CheckOutcome] = []
        self.menu = {
            1: ("Degree law", self.check_degree_law),
            2: ("Nodelessness", self.check_nodelessness),
            3: ("Iso-spectrality", self.check_isospectral),
            4: ("Norm product", self.check_norms),
            5: ("Shape invariance", self.check_shape_invariance),
            6: ("Pseudo virtual addition", self.check_added_level),
            7: ("Half-integer equivalence", self.check_equivalence),
            8: ("Classification table", self.check_classification),
            9: ("Solver sanity", self.check_solver),
        }

    def run_check(self, func, name: str) -> CheckOutcome:
        print(f"\n{YELLOW}▶ Running: {name}...{RESET}")
        start = time.time()
        try:
            passed, details = func()
        except Exception as e:
            logger.error(f"{name} raised: {e}", exc_info=True)
            passed, details = False, f"{type(e).__name__}: {e}"
        duration = time.time() - start
        color, label = (GREEN, "PASSED") if passed else (RED, "FAILED")
        print(f"{color}{label}{RESET} ({duration:.2f}s) - {details}")
        return CheckOutcome(name, passed, details, duration)

    # ============== CHECKS ==============

    def check_degree_law(self) -> Tuple[bool, str]:
        specs = random_specs(200, seed=2024)
        bad = [str(s) for s in specs if xi_polynomial(s).degree != extension_degree(s)]
        if bad:
            return False, f"{len(bad)} degenerate: {bad[:3]}"
        return True, f"{len(specs)} random specs, deg Xi_D = ell_D for all"

    def check_nodelessness(self) -> Tuple[bool, str]:
        p = make_params("M", MORSE)
        counts = {}
        for size in (1, 2, 3):
            for subset in combinations((7, 8, 9), size):
                spec = build_spec(p, [("overshoot", v) for v in subset])
                counts[subset] = check_nodeless(spec)[1]
        bad = {k: c for k, c in counts.items() if c}
        return not bad, f"Sturm counts {counts}"

    def check_isospectral(self) -> Tuple[bool, str]:
        spec = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8)])
        result = verify_isospectral(spec)
        return result.passed, f"{[round(v, 6) for v in result.spectrum.values]}; {result.detail}"

    def check_norms(self) -> Tuple[bool, str]:
        spec = build_spec(make_params("M", MORSE), [("overshoot", 7)])
        norms = check_norms(spec)
        return norms.passed(), f"off-diagonal {norms.max_offdiagonal:.2e}, diagonal {norms.max_diagonal_error:.2e}"

    def check_shape_invariance(self) -> Tuple[bool, str]:
        cases = [
            (make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8)]),
            (make_params("hDPT", {"g": "5/3", "h": "10"}), [("overshoot", 9), ("overshoot", 10)]),
            (make_params("Kh", {"g": "5/3", "mu": "9"}), [("twisted", 1), ("twisted", 2)]),
            (make_params("hDPT", {"g": "5/3", "h": "10"}), [("twisted-I", 0), ("twisted-II", 0)]),
        ]
        details = []
        passed = True
        for p, seeds in cases:
            report = verify_shape_invariance(build_spec(p, seeds))
            passed = passed and report.passed and report.samples >= 64
            details.append(f"{p.family.value}:{report.samples}/{report.max_residual}")
        return passed, ", ".join(details)

    def check_added_level(self) -> Tuple[bool, str]:
        p = make_params("s", {"h": "7/3"})
        for v in range(5, 10):
            spec = build_spec(p, [("overshoot", v)])
            if check_nodeless(spec)[0]:
                result = verify_isospectral(spec)
                return result.passed, f"v={v}, levels {[round(x, 6) for x in result.spectrum.values]}"
        refused = 0
        for v in range(5, 10):
            try:
                verify_isospectral(build_spec(p, [("overshoot", v)]))
            except SingularExtensionError:
                refused += 1
        return refused == 5, f"no nodeless seed in 5..9; {refused}/5 refused as singular"

    def check_equivalence(self) -> Tuple[bool, str]:
        rm = halfint_equivalence(make_params("RM", {"h": "7/2", "mu": "1"}, True), [8])
        s = halfint_equivalence(make_params("s", {"h": "5/2"}, True), [6])
        hst = halfint_equivalence(make_params("hst", {"h": "7/2", "mu": "1"}, True), [8])
        passed = rm.passed and rm.dual_degree == 0 and s.passed and not hst.proportional
        return passed, f"RM {rm.proportional}/deg {rm.dual_degree}, s {s.proportional}, hst {hst.proportional}"

    def check_classification(self) -> Tuple[bool, str]:
        checked, wrong = 0, []
        for family in all_families():
            p = make_params(family.tag, CLASSIFY_PARAMS[family.tag])
            kinds = [SeedKind.OVERSHOOT] + [SeedKind.parse(k) for k in family.twist_kinds]
            for kind in kinds:
                for region in seed_regions(p, kind):
                    for v in candidates(region)[:3]:
                        found = classify_seed(make_seed(p, SeedRef(kind, v))).value
                        checked += 1
                        if found != region.note:
                            wrong.append(f"{p} {kind.value}({v}): {found} != {region.note}")
        return not wrong, f"{checked} seeds classified" + (f"; wrong: {wrong[:3]}" if wrong else "")

    def check_solver(self) -> Tuple[bool, str]:
        box = schrodinger_spectrum(lambda x: np.zeros_like(x), -1.0, 1.0, 60.0, enlarge=False, order_study=True)
        exact = [(k * np.pi / 2) ** 2 for k in range(1, len(box.levels) + 1)]
        box_ok = all(abs(l.numeric - e) <= 1e-6 * e for l, e in zip(box.levels, exact))
        order_ok = box.observed_order is not None and 1.8 <= box.observed_order <= 2.2

        p = make_params("s", {"h": "2"}, True)
        soliton = family_spectrum(get_family("s"), p)
        levels = [l.numeric for l in soliton.levels]
        soliton_ok = len(levels) == 2 and abs(levels[0]) <= 1e-4 and abs(levels[1] - 3) <= 1e-4
        passed = box_ok and order_ok and soliton_ok
        return passed, f"box {len(box.levels)} levels, order {box.observed_order}, soliton {levels}"

    # ============== REPORT ==============

    def generate_report(self):
        passed = sum(1 for r in self.results if r.passed)
        total = len(self.results)
        lines = [
            "# Acceptance Report",
            f"**Date:** {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}",
            f"**Status:** {'PASSED' if passed == total else 'PARTIAL' if passed > 0 else 'FAILED'}",
            "",
            "## Summary",
            f"- **Checks Run:** {total}",
            f"- **Passed:** {passed}",
            f"- **Failed:** {total - passed}",
            "",
            "## Detailed Results",
            "",
            "| Check | Status | Duration | Details |",
            "|-------|--------|----------|---------|",
        ]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            details = r.details.replace("|", "/")
            lines.append(f"| {r.name} | {status} | {r.duration:.2f}s | {details} |")
        os.makedirs(os.path.dirname(os.path.abspath(self.report_file)), exist_ok=True)
        with open(self.report_file, "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")
        print(f"\n{GREEN}Report saved to: {self.report_file}{RESET}")

    def run_all(self) -> bool:
        print(f"\n{BOLD}Running ALL checks...{RESET}")
        self.results = [self.run_check(func, name) for name, func in self.menu.values()]
        self.generate_report()
        return all(r.passed for r in self.results)

    def run_single(self, number: int) -> bool:
        if number not in self.menu:
            print(f"{RED}Invalid check number: {number}{RESET}")
            return False
        name, func = self.menu[number]
        self.results = [self.run_check(func, name)]
        self.generate_report()
        return self.results[0].passed


def main():
    parser = argparse.ArgumentParser(description="Acceptance Runner")
    parser.add_argument("--all", action="store_true", help="Run all checks")
    parser.add_argument("--test", type=int, help="Run a specific check by number (1-9)")
    parser.add_argument("--report", default=REPORT_FILE, help="Markdown report path")
    args = parser.parse_args()

    runner = AcceptanceRunner(args.report)
    if args.test:
        ok = runner.run_single(args.test)
    else:
        ok = runner.run_all()
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
