"""
Report value objects shared by every suite

A report is an ordered list of named checks, each with a verdict and an
optional witness; it renders as JSON, CSV (one check per row) or text.
"""
from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass, field
from io import StringIO
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

REPORT_FORMATS = ("json", "csv", "text")


@dataclass
class Check:
    name: str
    passed: bool
    witness: Optional[Any] = None

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'witness': self.witness,
        }


@dataclass
class Report:
    command: str
    descriptor: Dict = field(default_factory=dict)
    seed: Optional[int] = None
    samples: int = 0
    checks: List[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: Any = None) -> Check:
        check = Check(name, bool(passed), witness)
        self.checks.append(check)
        if not check.passed:
            logger.info(f"{self.command}: check '{name}' failed ({witness})")
        return check

    def extend(self, other: Report, prefix: str = "") -> None:
        for check in other.checks:
            self.checks.append(Check(f"{prefix}{check.name}", check.passed, check.witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        ok = sum(1 for c in self.checks if c.passed)
        return f"{ok}/{len(self.checks)} checks passed"

    def to_dict(self) -> Dict:
        return {
            'command': self.command,
            'descriptor': self.descriptor,
            'seed': self.seed,
            'samples': self.samples,
            'checks': [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_csv(self) -> str:
        output = StringIO()
        writer = csv.writer(output)
        writer.writerow(['command', 'check', 'passed', 'witness'])
        for check in self.checks:
            witness = '' if check.witness is None else json.dumps(check.witness, ensure_ascii=False)
            writer.writerow([self.command, check.name, check.passed, witness])
        content = output.getvalue()
        output.close()
        return content

    def to_text(self) -> str:
        lines = [f"{self.command} {self.descriptor or ''}".rstrip()]
        for check in self.checks:
            mark = "PASS" if check.passed else "FAIL"
            line = f"  [{mark}] {check.name}"
            if check.witness is not None:
                line += f": {check.witness}"
            lines.append(line)
        lines.append(self.summary())
        return "\n".join(lines)

    def render(self, fmt: str = "json") -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"Invalid format '{fmt}'. Must be one of: {list(REPORT_FORMATS)}")
