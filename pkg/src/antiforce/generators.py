"""Constructors for the named graph families and their edge classes.

Hypercube-family vertices are bit strings ``x1 x2 ... xn`` stored as the
integer whose bit ``i-1`` is ``xi``. Class ``i`` (1-based) of ``Q_n`` holds the
edges flipping bit ``i-1``; for folded and enhanced hypercubes class ``n+1``
holds the extra complement edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidInput
from .graph import Graph, canon

FAMILIES = (
    "complete",
    "complete_bipartite",
    "cycle",
    "path",
    "hypercube",
    "folded_hypercube",
    "enhanced_hypercube",
)

# number of integer parameters accepted per family (min, max)
_ARITY = {
    "complete": (1, 1),
    "complete_bipartite": (1, 2),
    "cycle": (1, 1),
    "path": (1, 1),
    "hypercube": (1, 1),
    "folded_hypercube": (1, 1),
    "enhanced_hypercube": (2, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.family not in _ARITY:
            raise InvalidInput(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        lo, hi = _ARITY[self.family]
        if not lo <= len(self.params) <= hi:
            raise InvalidInput(f"{self.family} takes {lo}..{hi} integer parameters")


def hamming_distance(x: int, y: int, n: int | None = None) -> int:
    if n is not None and not (0 <= x < 1 << n and 0 <= y < 1 << n):
        raise InvalidInput(f"vertex outside Q_{n}")
    return (x ^ y).bit_count()


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidInput("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int | None = None) -> Graph:
    """``K_{m,n}`` with parts ``0..m-1`` and ``m..m+n-1``."""
    n = m if n is None else n
    if m < 1 or n < 1:
        raise InvalidInput("complete bipartite graph needs both parts non-empty")
    return Graph(m + n, ((a, m + b) for a in range(m) for b in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidInput("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def _cube_classes(n: int) -> dict[int, frozenset]:
    return {
        i + 1: frozenset((x, x | 1 << i) for x in range(1 << n) if not x >> i & 1)
        for i in range(n)
    }


def _complement_class(n: int, mask: int) -> frozenset:
    return frozenset(canon(x, x ^ mask) for x in range(1 << n))


def hypercube_classes(n: int) -> tuple[Graph, dict[int, frozenset]]:
    if n < 1:
        raise InvalidInput("hypercube needs n >= 1")
    classes = _cube_classes(n)
    return Graph(1 << n, (e for c in classes.values() for e in c)), classes


def enhanced_hypercube_classes(n: int, k: int) -> tuple[Graph, dict[int, frozenset]]:
    """``Q_{n,k}``: extra edges complement the first ``n-k`` coordinates."""
    if n < 2:
        raise InvalidInput("enhanced hypercube needs n >= 2")
    if not 0 <= k <= n - 1:
        raise InvalidInput(f"enhanced hypercube needs 0 <= k <= n-1, got k={k}")
    classes = _cube_classes(n)
    extra = _complement_class(n, (1 << (n - k)) - 1)
    if extra != classes[1]:
        # k = n-1 complements only x1, which reproduces E_1
        classes[n + 1] = extra
    return Graph(1 << n, (e for c in classes.values() for e in c)), classes


def folded_hypercube_classes(n: int) -> tuple[Graph, dict[int, frozenset]]:
    if n < 2:
        raise InvalidInput("folded hypercube needs n >= 2")
    return enhanced_hypercube_classes(n, 0)


def hypercube(n: int) -> Graph:
    return hypercube_classes(n)[0]


def folded_hypercube(n: int) -> Graph:
    return folded_hypercube_classes(n)[0]


def enhanced_hypercube(n: int, k: int) -> Graph:
    return enhanced_hypercube_classes(n, k)[0]


def generate(spec: FamilySpec) -> tuple[Graph, dict[int, frozenset]]:
    """Build the family member and its labelled edge classes (may be empty)."""
    p = spec.params
    if spec.family == "hypercube":
        return hypercube_classes(*p)
    if spec.family == "folded_hypercube":
        return folded_hypercube_classes(*p)
    if spec.family == "enhanced_hypercube":
        return enhanced_hypercube_classes(*p)
    builder = {
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "cycle": cycle,
        "path": path,
    }[spec.family]
    return builder(*p), {}
