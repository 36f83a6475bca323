"""
Catalog of counterexample constructions
Enumerates every rank set with a counterexample and runs the verify/certify suite
"""
import logging
import re
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from counterexamples.certifier import certified, certify_construction
from counterexamples.constructions import (
    Construction,
    ConstructionError,
    build_counterexample,
    gap_and_floor,
    verify_construction,
)
from counterexamples.hints import ProofHint, load_hints
from positivity.reports import Report

logger = logging.getLogger(__name__)

CATALOG_RANGES = {"C": (2, 3, 4), "B": (3, 4)}


def catalog_ranks(n: int) -> List[Tuple[int, ...]]:
    """Every nonempty K in [n] that is not {k, ..., n}, in size then lexicographic order"""
    out = []
    for size in range(1, n + 1):
        for K in combinations(range(1, n + 1), size):
            try:
                gap_and_floor(n, K)
            except ConstructionError:
                continue
            out.append(K)
    return out


def catalog_entries(system: str, n: int) -> List[Construction]:
    return [build_counterexample(system, n, K) for K in catalog_ranks(n)]


class Catalog:
    """
    Lookup and suite runs over the catalog

    Constructions are built on first access and addressed by name, e.g.
    "C.case_ii.n4.K1-2-4".
    """

    NAME_PATTERN = re.compile(r'^(?P<system>[BC])\.case_(i|ii|iii)\.n(?P<n>\d+)\.K(?P<K>\d+(-\d+)*)$')

    def __init__(self, ranges: Optional[Dict[str, Tuple[int, ...]]] = None,
                 hints: Optional[Dict[str, ProofHint]] = None):
        self.ranges = ranges or CATALOG_RANGES
        self._hints = hints
        self._entries: Optional[Dict[str, Construction]] = None

    @property
    def hints(self) -> Dict[str, ProofHint]:
        if self._hints is None:
            self._hints = load_hints()
        return self._hints

    @property
    def entries(self) -> Dict[str, Construction]:
        if self._entries is None:
            self._entries = {}
            for system, ns in self.ranges.items():
                for n in ns:
                    for c in catalog_entries(system, n):
                        self._entries[c.name] = c
            logger.debug(f"Catalog holds {len(self._entries)} constructions")
        return self._entries

    def names(self) -> List[str]:
        return list(self.entries)

    def get(self, name: str) -> Construction:
        """
        Raises:
            ConstructionError: the name is malformed or names no construction
        """
        if name in self.entries:
            return self.entries[name]
        match = self.NAME_PATTERN.match(name)
        if not match:
            raise ConstructionError(f"Invalid construction name '{name}'")
        K = [int(k) for k in match.group('K').split('-')]
        c = build_counterexample(match.group('system'), int(match.group('n')), K)
        if c.name != name:
            raise ConstructionError(f"'{name}' names no construction; K = {K} gives {c.name}")
        return c

    def run(self, c: Construction) -> Report:
        """Verify c, then certify it; the descriptor carries the verdict"""
        report = Report("counterexample", {"name": c.name, **c.descriptor.to_json_dict(), "K": list(c.ranks)})
        verified = verify_construction(c)
        report.extend(verified)
        certification = certify_construction(c, self.hints)
        verdict = certification.descriptor["verdict"]
        report.add(f"no extension: {verdict}", certified(certification) != c.expected["extendable"], {
            "method": certification.descriptor["method"],
            "steps": certification.summary(),
        })
        report.descriptor.update({
            "case": c.case,
            "variant": c.variant,
            "verdict": verdict,
            "method": certification.descriptor["method"],
            "used_hints": certification.descriptor["used_hints"],
        })
        return report

    def summary_report(self, system: Optional[str] = None, n: Optional[int] = None) -> Report:
        """Run every (matching) construction; one check per construction"""
        report = Report("catalog", {"system": system, "n": n})
        for name, c in self.entries.items():
            if system and c.descriptor.system != system:
                continue
            if n and c.descriptor.n != n:
                continue
            run = self.run(c)
            report.add(name, run.passed, {
                "case": c.case,
                "verdict": run.descriptor["verdict"],
                "method": run.descriptor["method"],
                "used_hints": run.descriptor["used_hints"],
            })
        logger.info(f"catalog: {report.summary()}")
        return report
