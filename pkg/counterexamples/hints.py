"""
Proof hint files for the certifier
Handles YAML loading and validation of scripted case splits
"""
import re
import yaml
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from sympy import Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from algebra.symbolic import Entry, from_sympy
from config.settings import HINTS_FILE

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)


class HintError(ValueError):
    """Raised for malformed hint files"""
    pass


@dataclass(frozen=True)
class HintBranch:
    name: str
    vector: Tuple[Entry, ...]


@dataclass(frozen=True)
class ProofHint:
    construction: str
    rank: int
    parameters: Tuple[str, ...]
    description: str
    branches: Tuple[HintBranch, ...]


class HintParser:
    """Parse proof_hints.yaml documents"""

    # A scalar literal (optionally times r2), a parameter name, or an operator
    TOKEN_PATTERN = re.compile(
        r"(?P<number>\d+(?:/\d+)?)(?P<root>r2)?(?![A-Za-z0-9_])"
        r"|(?P<name>[a-z][a-z0-9_]*)"
        r"|(?P<op>[-+*/^()])"
        r"|(?P<space>\s+)"
    )

    REQUIRED_FIELDS = ['construction', 'rank', 'branches']
    OPTIONAL_FIELDS = ['parameters', 'description']

    @classmethod
    def _to_source(cls, text: str, parameters: Tuple[str, ...]) -> str:
        """Rewrite r2 literals as sqrt(2) and reject anything but declared names"""
        out, pos = [], 0
        while pos < len(text):
            match = cls.TOKEN_PATTERN.match(text, pos)
            if not match:
                raise HintError(f"Invalid factor {text[pos:]!r} in entry {text!r}")
            if match.group('number'):
                number = match.group('number')
                out.append(f"({number})*sqrt(2)" if match.group('root') else f"({number})")
            elif match.group('name'):
                if match.group('name') not in parameters:
                    raise HintError(f"Undeclared parameter '{match.group('name')}' in entry {text!r}")
                out.append(match.group('name'))
            elif match.group('op'):
                out.append(match.group('op'))
            pos = match.end()
        return " ".join(out)

    @classmethod
    def parse_entry(cls, text: str, parameters: Tuple[str, ...]) -> Entry:
        """
        Parse one polynomial entry such as "1r2*b", "-1/2*b^2" or "1 + b"

        Raises:
            HintError: If the entry is not a polynomial over Q(r2) in the declared parameters
        """
        text = str(text).strip()
        if not text:
            raise HintError("Empty vector entry")
        source = cls._to_source(text, parameters)
        try:
            expr = parse_expr(source, local_dict={p: Symbol(p) for p in parameters},
                              transformations=TRANSFORMATIONS)
            return from_sympy(expr)
        except Exception as e:
            raise HintError(f"Invalid factor in entry {text!r}: {e}")

    @classmethod
    def parse_hint(cls, data: Dict) -> ProofHint:
        if not isinstance(data, dict):
            raise HintError("Each hint must be a YAML dictionary")
        for field in cls.REQUIRED_FIELDS:
            if field not in data:
                raise HintError(f"Missing required field: {field}")

        name = data['construction']
        if not isinstance(name, str):
            raise HintError("Construction name must be a string")

        rank = data['rank']
        if not isinstance(rank, int) or rank < 1:
            raise HintError(f"{name}: rank must be a positive integer")

        parameters = tuple(data.get('parameters') or ())
        if not all(isinstance(p, str) for p in parameters):
            raise HintError(f"{name}: parameters must be strings")

        branches = data['branches']
        if not isinstance(branches, list) or not branches:
            raise HintError(f"{name}: branches must be a nonempty list")
        parsed = []
        lengths = set()
        for i, branch in enumerate(branches):
            if not isinstance(branch, dict) or 'vector' not in branch:
                raise HintError(f"{name}: branch {i} needs a vector")
            vector = tuple(cls.parse_entry(e, parameters) for e in branch['vector'])
            lengths.add(len(vector))
            parsed.append(HintBranch(str(branch.get('name', f"branch {i}")), vector))
        if len(lengths) != 1:
            raise HintError(f"{name}: branch vectors have different lengths {sorted(lengths)}")

        return ProofHint(name, rank, parameters, str(data.get('description', '')).strip(), tuple(parsed))

    @classmethod
    def parse(cls, content: str) -> Dict[str, ProofHint]:
        """
        Parse a hint document into a map from construction name to hint

        Raises:
            HintError: If the document is invalid
        """
        if not content or not content.strip():
            raise HintError("Empty hint file")
        try:
            document = yaml.safe_load(content)
        except yaml.YAMLError as e:
            raise HintError(f"Invalid YAML: {e}")
        if not isinstance(document, dict) or not isinstance(document.get('hints'), list):
            raise HintError("Hint file must be a dictionary with a 'hints' list")

        hints = {}
        for data in document['hints']:
            hint = cls.parse_hint(data)
            if hint.construction in hints:
                raise HintError(f"Duplicate hint for {hint.construction}")
            hints[hint.construction] = hint
        return hints

    @classmethod
    def validate(cls, content: str) -> List[str]:
        """
        Validate a hint document without raising exceptions

        Returns:
            List of validation error messages (empty if valid)
        """
        errors = []

        try:
            cls.parse(content)
        except HintError as e:
            errors.append(str(e))

        return errors


def load_hints(path: Optional[Path] = None) -> Dict[str, ProofHint]:
    """
    Load the hint file (the packaged one by default)

    Raises:
        HintError: If the file is unreadable or invalid
    """
    path = Path(path or HINTS_FILE)
    try:
        content = path.read_text(encoding='utf-8')
    except OSError as e:
        raise HintError(f"Cannot read hint file {path}: {e}")
    hints = HintParser.parse(content)
    logger.debug(f"Loaded {len(hints)} proof hints from {path}")
    return hints
