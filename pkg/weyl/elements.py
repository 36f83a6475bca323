"""
Weyl group elements as (signed) permutations

Products compose left to right: (a * b)(x) = b(a(x)), so the element of a
word applies its letters in order. Right multiplication by s_i swaps the
values i and i+1 in one-line notation, left multiplication swaps positions.

Signed permutations store only w(1..n); w(i bar) = -w(i) is implied.
Barred values are negative integers internally and carry a "b" suffix
when rendered ("2,1b,3").
"""
from __future__ import annotations

import re
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

ELEMENT_KINDS = ("A", "signed")


class WeylError(ValueError):
    """Raised for malformed elements, words or kind mismatches"""
    pass


@dataclass(frozen=True)
class WeylElement:
    """
    kind "A": a permutation of [n], images[i-1] = w(i)
    kind "signed": a signed permutation of [n, n bar], images[i-1] = w(i) in +-[n]
    """

    kind: str
    n: int
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if self.kind not in ELEMENT_KINDS:
            raise WeylError(f"Invalid element kind '{self.kind}'. Must be one of: {list(ELEMENT_KINDS)}")
        if len(images) != self.n:
            raise WeylError(f"Expected {self.n} images, got {len(images)}")
        if self.kind == "A":
            if sorted(images) != list(range(1, self.n + 1)):
                raise WeylError(f"{images} is not a permutation of [{self.n}]")
        elif sorted(abs(v) for v in images) != list(range(1, self.n + 1)):
            raise WeylError(f"{images} is not a signed permutation of [{self.n}]")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, kind: str, n: int) -> WeylElement:
        return cls(kind, n, tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, kind: str, n: int, i: int) -> WeylElement:
        """s_i: (i i+1) for i < n; for signed elements s_n = (n n bar)"""
        images = list(range(1, n + 1))
        top = n - 1 if kind == "A" else n
        if not 1 <= i <= top:
            raise WeylError(f"Simple reflection s_{i} does not exist for kind {kind} on [{n}]")
        if i < n:
            images[i - 1], images[i] = images[i], images[i - 1]
        else:
            images[n - 1] = -n
        return cls(kind, n, tuple(images))

    @classmethod
    def longest(cls, kind: str, n: int) -> WeylElement:
        if kind == "A":
            return cls(kind, n, tuple(range(n, 0, -1)))
        return cls(kind, n, tuple(-i for i in range(1, n + 1)))

    @classmethod
    def parse(cls, kind: str, text: str) -> WeylElement:
        """Inverse of str(): "2,1b,3" for signed elements, "4,3,1,2" for A"""
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        images = []
        for token in tokens:
            match = re.fullmatch(r"(\d+)(b?)", token)
            if match is None:
                raise WeylError(f"Cannot parse one-line entry '{token}'")
            value = int(match.group(1))
            images.append(-value if match.group(2) else value)
        return cls(kind, len(images), tuple(images))

    # ------------------------------------------------------------------
    # Group structure
    # ------------------------------------------------------------------

    def __call__(self, v: int) -> int:
        if v < 0:
            return -self.images[-v - 1]
        return self.images[v - 1]

    def __mul__(self, other: WeylElement) -> WeylElement:
        """First self, then other"""
        self._check_same(other)
        return WeylElement(self.kind, self.n, tuple(other(v) for v in self.images))

    def inverse(self) -> WeylElement:
        images = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            images[abs(v) - 1] = i if v > 0 else -i
        return WeylElement(self.kind, self.n, tuple(images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def _check_same(self, other: WeylElement) -> None:
        if (self.kind, self.n) != (other.kind, other.n):
            raise WeylError(
                f"Kind mismatch: {self.kind}({self.n}) against {other.kind}({other.n})"
            )

    # ------------------------------------------------------------------
    # Length
    # ------------------------------------------------------------------

    @property
    def rank(self) -> int:
        """Number of simple reflections"""
        return self.n - 1 if self.kind == "A" else self.n

    def _key(self, v: int) -> int:
        # 1 < ... < n < n bar < ... < 1 bar
        return v if v > 0 else 2 * self.n + 1 + v

    def inversions(self) -> List[Tuple[int, int]]:
        """
        Inversion pairs (i, j) with i < j and w(j) < w(i)

        For signed elements j runs over [n] and over the barred j bar with
        i <= j (entered as -j), in the order 1 < ... < n < 0 < n bar < ... < 1 bar.
        """
        pairs = []
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                if self._key(self(j)) < self._key(self(i)):
                    pairs.append((i, j))
        if self.kind == "signed":
            for i in range(1, self.n + 1):
                for j in range(i, self.n + 1):
                    if self._key(self(-j)) < self._key(self(i)):
                        pairs.append((i, -j))
        return pairs

    def length(self) -> int:
        return len(self.inversions())

    def right_descents(self) -> List[int]:
        return [i for i in range(1, self.rank + 1) if (self * self.simple_of(i)).length() < self.length()]

    def left_descents(self) -> List[int]:
        return [i for i in range(1, self.rank + 1) if (self.simple_of(i) * self).length() < self.length()]

    def simple_of(self, i: int) -> WeylElement:
        return WeylElement.simple(self.kind, self.n, i)

    # ------------------------------------------------------------------
    # Ambient realization
    # ------------------------------------------------------------------

    def to_ambient(self, odd: bool = False) -> WeylElement:
        """
        The permutation of [2n] (or [2n+1] with the centre 0 fixed) obtained by
        relabelling 1..n, (0,) n bar..1 bar as 1, 2, ..., N
        """
        if self.kind != "signed":
            raise WeylError("Only signed elements have an ambient realization")
        n = self.n
        N = 2 * n + 1 if odd else 2 * n

        def position(v: int) -> int:
            return v if v > 0 else N + 1 + v

        labels = list(range(1, n + 1)) + ([0] if odd else []) + list(range(-n, 0))
        images = []
        for v in labels:
            images.append(n + 1 if v == 0 else position(self(v)))
        return WeylElement("A", N, tuple(images))

    def __str__(self) -> str:
        return ",".join(f"{-v}b" if v < 0 else str(v) for v in self.images)

    def one_line(self) -> str:
        """Compact one-line notation for permutations of fewer than ten letters"""
        if self.kind == "A" and self.n < 10:
            return "".join(str(v) for v in self.images)
        return str(self)


def element_from_letters(kind: str, n: int, letters: Iterable[int]) -> WeylElement:
    w = WeylElement.identity(kind, n)
    for i in letters:
        w = w * WeylElement.simple(kind, n, i)
    return w


def all_elements(kind: str, n: int) -> List[WeylElement]:
    """Every element, reachable from the identity through the Cayley graph"""
    return list(cayley_graph(kind, n).nodes)


def cayley_graph(kind: str, n: int) -> nx.Graph:
    """Undirected Cayley graph for the simple reflections (right multiplication)"""
    identity = WeylElement.identity(kind, n)
    rank = identity.rank
    graph = nx.Graph()
    graph.add_node(identity)
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, rank + 1):
                v = w * WeylElement.simple(kind, n, i)
                if v not in graph:
                    nxt.append(v)
                    graph.add_node(v)
                graph.add_edge(w, v, letter=i)
        frontier = nxt
    logger.debug(f"Cayley graph {kind}({n}): {graph.number_of_nodes()} elements")
    return graph


def bfs_lengths(kind: str, n: int) -> Dict[WeylElement, int]:
    """Word length of every element by breadth-first search"""
    graph = cayley_graph(kind, n)
    return dict(nx.single_source_shortest_path_length(graph, WeylElement.identity(kind, n)))
