"""Simply laced Cartan data (families A, D, E) and the root-lattice pairing."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = ["CartanDatum", "cartan", "from_label", "pairing", "simple_root"]


@dataclass(frozen=True)
class CartanDatum:
    family: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def indices(self):
        return range(1, self.rank + 1)

    def a(self, i, j):
        return self.matrix[i - 1][j - 1]

    def adjacent(self, i, j):
        return self.matrix[i - 1][j - 1] == -1

    def check_index(self, i):
        if not 1 <= i <= self.rank:
            raise ValueError(
                "index %r outside the index set 1..%d of %s" % (i, self.rank, self.label))

    @property
    def label(self):
        return "%s%d" % (self.family, self.rank)

    def __str__(self):
        return self.label


def _edges(family, rank):
    if family == "A":
        if rank < 1:
            raise ValueError("family A needs rank >= 1")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise ValueError("family D needs rank >= 4")
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("family E needs rank in {6, 7, 8}")
        chain = [(1, 3), (3, 4), (4, 5), (5, 6)]
        chain += [(6, 7)] if rank >= 7 else []
        chain += [(7, 8)] if rank >= 8 else []
        return chain + [(2, 4)]
    raise ValueError("unknown family %r (expected A, D or E)" % (family,))


def _connected(rank, edges):
    seen = {1}
    frontier = [1]
    nbrs = {i: [] for i in range(1, rank + 1)}
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    while frontier:
        k = frontier.pop()
        for n in nbrs[k]:
            if n not in seen:
                seen.add(n)
                frontier.append(n)
    return len(seen) == rank


@lru_cache(maxsize=None)
def cartan(family, rank):
    """Bourbaki-labelled Cartan datum for the given simply laced family."""
    edges = _edges(family, int(rank))
    rank = int(rank)
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        m[i - 1][j - 1] = -1
        m[j - 1][i - 1] = -1
    if rank > 1 and not _connected(rank, edges):
        raise ValueError("Dynkin graph of %s%d is not connected" % (family, rank))
    return CartanDatum(family, rank, tuple(tuple(row) for row in m))


def from_label(text):
    """Parse labels such as "A3", "D4", "E6"."""
    m = re.fullmatch(r"\s*([ADEade])\s*(\d+)\s*", text or "")
    if not m:
        raise ValueError("cannot parse Cartan type %r (expected e.g. A3, D4, E6)" % (text,))
    return cartan(m.group(1).upper(), int(m.group(2)))


def simple_root(i):
    return {i: 1}


def pairing(beta, gamma, c):
    """Symmetric bilinear pairing of root-lattice elements, (alpha_i, alpha_j)
    given by the Cartan matrix entry."""
    total = 0
    for i, bi in beta.items():
        if not bi:
            continue
        row = c.matrix[i - 1]
        for j, gj in gamma.items():
            if gj:
                total += bi * gj * row[j - 1]
    return total
