"""
Group descriptors for GL(r+1), Sp(2n), SO(2n+1) and SO(2n)
"""
from __future__ import annotations

import re
import logging
from dataclasses import dataclass
from typing import Optional

from algebra.forms import BilinearForm
from algebra.matrix import DimensionMismatchError, ExactMatrix

logger = logging.getLogger(__name__)

GROUP_SYSTEMS = ("A", "B", "C", "D")


class PinningError(ValueError):
    """Raised for invalid generator requests (bad index, zero torus parameter)"""
    pass


class MembershipError(ValueError):
    """Raised when a matrix that must lie in a group does not"""
    pass


@dataclass(frozen=True)
class GroupDescriptor:
    """
    A(r) is GL(r+1) with the standard pinning; C(n), B(n) and D(n) are the
    groups preserving the antidiagonal forms of the algebra.forms module
    """

    system: str
    n: int

    def __post_init__(self):
        if self.system not in GROUP_SYSTEMS:
            raise PinningError(f"Invalid system '{self.system}'. Must be one of: {list(GROUP_SYSTEMS)}")
        minimum = 4 if self.system == "D" else 1
        if self.n < minimum:
            raise PinningError(f"{self.system}({self.n}) needs rank at least {minimum}")

    DESCRIPTOR_PATTERN = re.compile(r"^\s*([ABCD])\s*\(\s*(\d+)\s*\)\s*$")

    @classmethod
    def parse(cls, text: str) -> GroupDescriptor:
        """"C(3)" style names"""
        match = cls.DESCRIPTOR_PATTERN.match(text)
        if not match:
            raise PinningError(f"Cannot parse group descriptor '{text}'")
        return cls(match.group(1), int(match.group(2)))

    @property
    def ambient(self) -> int:
        if self.system == "A":
            return self.n + 1
        if self.system == "B":
            return 2 * self.n + 1
        return 2 * self.n

    @property
    def rank(self) -> int:
        return self.n

    @property
    def form(self) -> Optional[BilinearForm]:
        if self.system == "C":
            return BilinearForm.type_c(self.n)
        if self.system == "B":
            return BilinearForm.type_b(self.n)
        if self.system == "D":
            return BilinearForm.type_d(self.n)
        return None

    @property
    def type_a(self) -> GroupDescriptor:
        """The GL of the ambient space"""
        return GroupDescriptor("A", self.ambient - 1)

    def __str__(self) -> str:
        return f"{self.system}({self.n})"

    def to_json_dict(self) -> dict:
        return {"system": self.system, "n": self.n, "ambient": self.ambient}


def group_membership(M: ExactMatrix, g: GroupDescriptor) -> bool:
    """
    M^t E M = E and det M = 1 for C, B and D; invertibility for A

    Raises:
        DimensionMismatchError: M is not square of the ambient size
    """
    if M.shape != (g.ambient, g.ambient):
        raise DimensionMismatchError(f"{g} acts on R^{g.ambient}, got a {M.shape} matrix")
    if g.system == "A":
        return not M.det().is_zero()
    E = g.form.matrix
    if M.transpose() @ E @ M != E:
        return False
    # Preserving an alternating form already forces det M = 1
    return g.system == "C" or M.det() == 1
